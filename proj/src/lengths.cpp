#include "hyplace/lengths.hpp"

#include <cmath>
#include <sstream>

namespace hyplace::lengths {

namespace {
const double kSqrt2 = std::sqrt(2.0);

int odd_minimizer(int n) {
    // Odd m minimizing |m/n - sqrt 2|: check the two odd numbers bracketing
    // n sqrt 2.
    const double target = n * kSqrt2;
    int lo = static_cast<int>(std::floor(target));
    if (lo % 2 == 0) --lo;
    const int hi = lo + 2;
    const double dlo = std::abs(double(lo) / n - kSqrt2);
    const double dhi = std::abs(double(hi) / n - kSqrt2);
    return (dlo <= dhi && lo >= 1) ? lo : hi;
}

double length_of(int m, int n) { return 2.0 * std::acosh(m + kSqrt2 * n); }
}  // namespace

std::vector<LengthSpectrumEntry> bolza_spectrum(int n_max) {
    std::vector<LengthSpectrumEntry> out;
    for (int n = 1; n <= n_max; ++n) {
        if (n == 48 || n == 72) continue;
        const int m = odd_minimizer(n);
        LengthSpectrumEntry e;
        e.length = length_of(m, n);
        e.multiplicity = 1;  // the rule fixes lengths only
        e.params = std::make_pair(m, n);
        e.multiplicity_provenance = Provenance::Numerical;
        out.push_back(e);
    }
    return out;
}

std::vector<LengthSpectrumEntry> bolza_trace_spectrum() {
    // Appendix F lemult, orientation-doubled.  Only the first multiplicity
    // is exact.
    static const std::pair<std::pair<int, int>, int> table[] = {
        {{1, 1}, 24}, {{3, 2}, 24}, {{5, 3}, 48}, {{7, 5}, 96},
        {{9, 6}, 48}, {{9, 7}, 48}, {{11, 8}, 8}, {{13, 9}, 96},
    };
    std::vector<LengthSpectrumEntry> out;
    bool first = true;
    for (const auto& [mn, mult] : table) {
        LengthSpectrumEntry e;
        e.length = length_of(mn.first, mn.second);
        e.multiplicity = mult;
        e.params = mn;
        e.multiplicity_provenance = first ? Provenance::Exact : Provenance::Numerical;
        first = false;
        out.push_back(e);
    }
    return out;
}

std::vector<SpectrumDiscrepancy> bolza_rule_discrepancies(int n_max) {
    std::vector<SpectrumDiscrepancy> flags;
    const auto table = bolza_trace_spectrum();
    for (const auto& e : bolza_spectrum(n_max)) {
        bool found = false;
        for (const auto& t : table)
            if (std::abs(t.length - e.length) < 1e-12) found = true;
        if (!found && e.length < table.back().length + 1e-9)
            flags.push_back({e.params->second, e.length});
    }
    return flags;
}

Systole systole_bolza() {
    Systole s;
    s.form_a = 2.0 * std::acosh(1.0 + kSqrt2);
    s.form_b = 4.0 * std::acosh(0.5 / std::sin(M_PI / 8));
    s.value = s.form_a;
    s.multiplicity = 12;
    return s;
}

Systole systole_klein() {
    Systole s;
    const double c7 = 1.0 / std::sin(M_PI / 7);
    s.form_a = 16.0 * std::asinh(0.5 * std::sqrt(c7 * c7 - 4.0) * std::sin(M_PI / 7));
    const double sn = std::sin(M_PI / 7);
    s.form_b = 8.0 * std::acosh(1.5 - 2.0 * sn * sn);
    s.value = s.form_b;
    s.multiplicity = 21;
    return s;
}

double jenni_family_systole(int genus) {
    return 4.0 * std::acosh(kSqrt2 * std::cos(M_PI / (4.0 * genus)));
}

FenchelNielsen klein_fenchel_nielsen() {
    FenchelNielsen fn;
    const double s = systole_klein().value;
    for (int i = 0; i < 6; ++i) fn.pairs.emplace_back(s, s / 8.0);
    return fn;
}

BolzaDerivedLengths bolza_derived_lengths() {
    BolzaDerivedLengths d;
    const double L = std::acosh(0.5 / std::sin(M_PI / 8));
    const double M = std::acosh(2.0 * std::cos(M_PI / 8) / std::sqrt(3.0));
    const double N = std::acosh((1.0 / std::tan(M_PI / 8)) / std::sqrt(3.0));
    d.a = 2.0 * L;
    d.b = L;
    d.c = 2.0 * (M + N);
    d.d = M + N;
    d.glued_boundary = d.c + 2.0 * d.a;
    return d;
}

std::string spectrum_csv(const std::vector<LengthSpectrumEntry>& entries,
                         const std::vector<SpectrumDiscrepancy>& flags) {
    std::ostringstream os;
    os << "length,m,n,multiplicity,provenance,note\n";
    char buf[64];
    for (const auto& e : entries) {
        std::snprintf(buf, sizeof buf, "%.15g", e.length);
        os << buf << ',';
        if (e.params)
            os << e.params->first << ',' << e.params->second << ',';
        else
            os << ",,";
        os << e.multiplicity << ','
           << (e.multiplicity_provenance == Provenance::Exact ? "exact" : "numerical") << ',';
        for (const auto& f : flags)
            if (e.params && f.n == e.params->second) os << "absent-from-trace-table";
        os << '\n';
    }
    return os.str();
}

}  // namespace hyplace::lengths
