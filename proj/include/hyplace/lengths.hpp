#pragma once

#include <optional>
#include <string>
#include <vector>

// Geodesic length spectra and global geometric invariants of the Bolza
// surface and the Klein quartic.

namespace hyplace::lengths {

enum class Provenance { Exact, Numerical };

struct LengthSpectrumEntry {
    double length;
    int multiplicity;
    std::optional<std::pair<int, int>> params;  // (m, n): cosh(l/2) = m + sqrt(2) n
    Provenance multiplicity_provenance = Provenance::Numerical;
};

// Literal Section 3.2 rule: for each n (skipping 48 and 72), m is the odd
// natural minimizing |m/n - sqrt(2)|.  Multiplicities are not generated.
std::vector<LengthSpectrumEntry> bolza_spectrum(int n_max);

// The embedded trace-formula table (Appendix F "lemult"): multiplicities
// doubled for both orientations; only the first is exact.
std::vector<LengthSpectrumEntry> bolza_trace_spectrum();

// The literal rule at n = 4 produces a length absent from the embedded
// table; callers of the spectrum report get the discrepancy flagged.
struct SpectrumDiscrepancy {
    int n;
    double literal_length;
};
std::vector<SpectrumDiscrepancy> bolza_rule_discrepancies(int n_max);

struct Systole {
    double value;
    int multiplicity;
    double form_a;  // 2 arccosh(1 + sqrt 2)   resp. 16 arcsinh(...)
    double form_b;  // 4 arccosh(csc(pi/8)/2)  resp. 8 arccosh(3/2 - 2 sin^2(pi/7))
};

Systole systole_bolza();
Systole systole_klein();

// s(F_g) = 4 arccosh(sqrt(2) cos(pi/4g)); reduces to the Bolza systole at g = 2.
double jenni_family_systole(int genus);

// Six (length, twist) pairs; twists are one eighth of the systole.
struct FenchelNielsen {
    std::vector<std::pair<double, double>> pairs;
};
FenchelNielsen klein_fenchel_nielsen();

struct BolzaDerivedLengths {
    double a;                 // = l(a') = l(alpha)
    double b;                 // = l(b')
    double c;
    double d;
    double glued_boundary;    // l(c) + 2 l(a)
};
BolzaDerivedLengths bolza_derived_lengths();

std::string spectrum_csv(const std::vector<LengthSpectrumEntry>& entries,
                         const std::vector<SpectrumDiscrepancy>& flags);

}  // namespace hyplace::lengths
