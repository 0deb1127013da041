#include <cmath>
#include <complex>

#include "hyplace/grouprep.hpp"

// Embedded group data: presentations, the 16-triangle action, character
// tables and representation matrices.  All of it is data, not derived; the
// unit tests verify relations, class sizes and orthogonality against the
// enumerated groups.

namespace hyplace::grouprep {

namespace {

complexd E(int x, int k = 1) { return std::polar(1.0, 2.0 * M_PI * k / x); }

Word w(std::initializer_list<int> v) { return Word(v); }

const double R3 = std::sqrt(3.0);
const double R2 = std::sqrt(2.0);

Matrix m1(complexd a) { return {{a}}; }

}  // namespace

GroupPresentation bolza_presentation() {
    GroupPresentation p;
    p.generators = {"r", "s", "t", "u"};
    // Theorem 3.3: R8 S2 T2 U3 RSRS STST RTR3T, UR=R7U2, U2R=STU, US=SU2, UT=RSU.
    p.relations = {
        w({1, 1, 1, 1, 1, 1, 1, 1}),
        w({2, 2}),
        w({3, 3}),
        w({4, 4, 4}),
        w({1, 2, 1, 2}),
        w({2, 3, 2, 3}),
        w({1, 3, 1, 1, 1, 3}),
        w({1, 1, 1, 1, 1, 1, 1, 4, 4, 1, 1, 1, 1, 1, 1, 1, 4, 4}),
        w({4, 4, 1, 4, 4, 3, 2}),
        w({4, 2, 4, 2}),
        w({4, 3, 4, 4, 2, 1, 1, 1, 1, 1, 1, 1}),
    };
    return p;
}

GroupPresentation klein_presentation() {
    GroupPresentation p;
    p.generators = {"a", "b", "c"};
    p.relations = {
        w({1, 1}), w({2, 2}), w({3, 3}),
        w({1, 2, 1, 2}),
        w({2, 3, 2, 3, 2, 3}),
        w({1, 3, 1, 3, 1, 3, 1, 3, 1, 3, 1, 3, 1, 3}),
        w({1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3}),
    };
    return p;
}

GroupPresentation fermat_presentation() {
    GroupPresentation p;
    p.generators = {"a", "b", "c"};
    p.relations = {
        w({1, 1, 1, 1, 1, 1, 1, 1}),
        w({2, 2, 2}),
        w({3, 3}),
        w({1, 2, 1, 2}),
        w({1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2}),
        w({1, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2, 2}),
        w({1, 3, 1, 3}),
        w({2, 3, 2, 3}),
    };
    return p;
}

GroupPresentation bring_presentation() {
    GroupPresentation p;
    p.generators = {"r", "s", "t"};
    p.relations = {
        w({1, 1, 1, 1, 1}),
        w({2, 2}),
        w({3, 3}),
        w({1, 3, 1, 3}),
        w({2, 3, 2, 3}),
        w({1, 2, 1, 2, 1, 2, 1, 2}),
        w({2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1}),
    };
    return p;
}

// ---- Table 3.1 ----

const BolzaAction& bolza_action() {
    static const BolzaAction act = [] {
        BolzaAction a;
        a.labels = {"P1Q4~Q1", "P1Q1Q2", "P1Q2Q3", "P1Q3Q4", "P1Q4Q1~", "P1Q1~Q2",
                    "P1Q2~Q3", "P1Q3~Q4", "P2Q4~Q1", "P2Q1Q2", "P2Q2Q3", "P2Q3Q4",
                    "P2Q4Q1~", "P2Q1~Q2", "P2Q2~Q3", "P2Q3~Q4"};
        a.action = {
            {1, 2, 3, 4, 5, 6, 7, 0, 9, 10, 11, 12, 13, 14, 15, 8},   // R
            {0, 7, 6, 5, 4, 3, 2, 1, 8, 15, 14, 13, 12, 11, 10, 9},   // S
            {8, 13, 10, 15, 12, 9, 14, 11, 0, 5, 2, 7, 4, 1, 6, 3},   // T
            {0, 7, 15, 12, 4, 3, 11, 8, 1, 6, 10, 9, 5, 2, 14, 13},   // U
        };
        return a;
    }();
    return act;
}

// ---- Bolza character table and representations (Appendix A) ----

const IrrepTable& bolza_irreps() {
    static const IrrepTable table = [] {
        IrrepTable t;
        t.group_name = "bolza";
        t.order = 96;
        t.classes = {
            {"1a", 1, 1, {}},
            {"4a", 2, 4, w({1, 1, 3})},
            {"2a", 12, 2, w({2})},
            {"3a", 8, 3, w({4})},
            {"4b", 6, 4, w({1, 1, 1, 2, 3})},
            {"2b", 1, 2, w({1, 1, 1, 1})},
            {"2c", 12, 2, w({1, 1, 2, 3})},
            {"12a", 8, 12, w({1, 1, 3, 4})},
            {"2d", 6, 2, w({1, 2})},
            {"8a", 12, 8, w({1, 1, 1, 1, 1, 3})},
            {"6a", 8, 6, w({1, 2, 3, 4})},
            {"8b", 12, 8, w({1, 1, 1})},
            {"12b", 8, 12, w({1, 1, 1, 1, 1, 1, 1, 3, 4, 1})},
        };
        const complexd A(R3, 0);
        auto row = [](std::initializer_list<complexd> v) { return std::vector<complexd>(v); };
        std::vector<std::vector<complexd>> chars = {
            row({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
            row({1, -1, -1, 1, 1, 1, 1, -1, -1, -1, 1, 1, -1}),
            row({1, -1, 1, 1, 1, 1, -1, -1, -1, 1, 1, -1, -1}),
            row({1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, 1}),
            row({2, -2, 0, -1, 2, 2, 0, 1, -2, 0, -1, 0, 1}),
            row({2, 2, 0, -1, 2, 2, 0, -1, 2, 0, -1, 0, -1}),
            row({3, -3, -1, 0, -1, 3, 1, 0, 1, 1, 0, -1, 0}),
            row({3, -3, 1, 0, -1, 3, -1, 0, 1, -1, 0, 1, 0}),
            row({3, 3, -1, 0, -1, 3, -1, 0, -1, 1, 0, 1, 0}),
            row({3, 3, 1, 0, -1, 3, 1, 0, -1, -1, 0, -1, 0}),
            row({4, 0, 0, -2, 0, -4, 0, 0, 0, 0, 2, 0, 0}),
            row({4, 0, 0, 1, 0, -4, 0, A, 0, 0, -1, 0, -A}),
            row({4, 0, 0, 1, 0, -4, 0, -A, 0, 0, -1, 0, A}),
        };
        // Afforded representations for chi1..chi10; repsn matrices for the
        // 4-dimensional chi11..chi13 (cyclotomic entries evaluated).
        const complexd e3 = E(3), e32 = E(3, 2), e4 = E(4);
        const complexd e127 = E(12, 7), e1211 = E(12, 11);
        std::vector<std::vector<Matrix>> mats(13);
        mats[0] = {m1(1), m1(1), m1(1), m1(1)};
        mats[1] = {m1(1), m1(-1), m1(-1), m1(1)};
        mats[2] = {m1(-1), m1(1), m1(-1), m1(1)};
        mats[3] = {m1(-1), m1(-1), m1(1), m1(1)};
        mats[4] = {{{0, -1}, {-1, 0}}, {{0, 1}, {1, 0}}, {{-1, 0}, {0, -1}}, {{e32, 0}, {0, e3}}};
        mats[5] = {{{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}, {{e32, 0}, {0, e3}}};
        mats[6] = {{{0, -1, 0}, {1, 0, 0}, {0, 0, -1}},
                   {{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}},
                   {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
        mats[7] = {{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}},
                   {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
                   {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
        mats[8] = {{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}},
                   {{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}},
                   {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
        mats[9] = {{{0, -1, 0}, {1, 0, 0}, {0, 0, -1}},
                   {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
                   {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
        mats[10] = {{{0, 0, -e127, 0}, {0, 0, 0, -e3}, {-e127, e4, 0, 0}, {-1, -e3, 0, 0}},
                    {{0, 0, 0, -e127}, {0, 0, -e3, 0}, {0, -e32, 0, 0}, {e1211, 0, 0, 0}},
                    {{-e1211, e127, 0, 0}, {e127, e1211, 0, 0}, {0, 0, e1211, -e3}, {0, 0, e3, -e1211}},
                    {{e3, 0, 0, 0}, {-1, e32, 0, 0}, {0, 0, e3, e4}, {0, 0, 0, e32}}};
        mats[11] = {{{0, -e32, 0, 0}, {1, 0, -e32, 0}, {0, -1, 0, -e127}, {-e127, 0, 0, 0}},
                    {{0, -e4, 0, e3}, {0, 0, -e127, 0}, {0, e1211, 0, 0}, {e32, 0, 1, 0}},
                    {{e1211, 0, -e127, 0}, {0, 0, 0, -1}, {-e127, 0, -e1211, 0}, {0, -1, 0, 0}},
                    {{0, 0, e32, 0}, {0, -e32, 0, -e4}, {-1, 0, -e3, 0}, {0, -e127, 0, 0}}};
        mats[12] = {{{0, -e127, 0, e32}, {0, 0, e4, 0}, {0, 0, 0, 1}, {-e32, 0, e3, 0}},
                    {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, -e32, 0, e127}, {-e127, 0, -e1211, 0}},
                    {{-e127, 0, -e1211, 0}, {0, 0, 0, 1}, {-e1211, 0, e127, 0}, {0, 1, 0, 0}},
                    {{1, 0, e3, 0}, {0, -e32, 0, -e4}, {0, 0, e32, 0}, {0, -e127, 0, 0}}};
        const int dims[13] = {1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4};
        for (int i = 0; i < 13; ++i) {
            Irrep ir;
            ir.name = "chi" + std::to_string(i + 1);
            ir.dimension = dims[i];
            ir.generator_matrices = mats[i];
            ir.character_row = chars[i];
            t.irreps.push_back(std::move(ir));
        }
        return t;
    }();
    return table;
}

// ---- Klein quartic (Appendix B): PGL-type group of order 336 ----

const IrrepTable& klein_irreps() {
    static const IrrepTable table = [] {
        IrrepTable t;
        t.group_name = "klein";
        t.order = 336;
        // Columns in the appendix order; representatives resolved at run
        // time from the enumeration by (order, size).
        t.classes = {
            {"1a", 1, 1, {}},   {"3a", 56, 3, {}}, {"6a", 56, 6, {}},
            {"2a", 28, 2, {}},  {"7a", 48, 7, {}}, {"2b", 21, 2, {}},
            {"8a", 42, 8, {}},  {"4a", 42, 4, {}}, {"8b", 42, 8, {}},
        };
        const complexd A(-R2, 0);  // -E(8)+E(8)^3
        auto row = [](std::initializer_list<complexd> v) { return std::vector<complexd>(v); };
        std::vector<std::vector<complexd>> chars = {
            row({1, 1, 1, 1, 1, 1, 1, 1, 1}),
            row({1, 1, -1, -1, 1, 1, -1, 1, -1}),
            row({6, 0, 0, 0, -1, -2, 0, 2, 0}),
            row({6, 0, 0, 0, -1, 2, A, 0, -A}),
            row({6, 0, 0, 0, -1, 2, -A, 0, A}),
            row({7, 1, -1, -1, 0, -1, 1, -1, 1}),
            row({7, 1, 1, 1, 0, -1, -1, -1, -1}),
            row({8, -1, -1, 2, 1, 0, 0, 0, 0}),
            row({8, -1, 1, -2, 1, 0, 0, 0, 0}),
        };
        const int dims[9] = {1, 1, 6, 6, 6, 7, 7, 8, 8};
        for (int i = 0; i < 9; ++i) {
            Irrep ir;
            ir.name = "rho" + std::to_string(i + 1);
            ir.dimension = dims[i];
            if (dims[i] == 1) {
                const complexd v = (i == 0) ? complexd(1) : complexd(-1);
                ir.generator_matrices = {m1(v), m1(v), m1(v)};
            }
            // The appendix listing for the 6/7/8-dimensional matrices is not
            // reproducible from the extracted text; those entries carry the
            // character row only (as the Bring table does throughout).
            ir.character_row = chars[i];
            t.irreps.push_back(std::move(ir));
        }
        return t;
    }();
    return table;
}

// ---- Fermat quartic (Appendix D, Remark D.1) ----

const IrrepTable& fermat_irreps() {
    static const IrrepTable table = [] {
        IrrepTable t;
        t.group_name = "fermat";
        t.order = 192;
        t.classes = {
            {"1a", 1, 1, {}},  {"2a", 12, 2, {}}, {"2b", 12, 2, {}}, {"3a", 32, 3, {}},
            {"4a", 6, 4, {}},  {"2c", 3, 2, {}},  {"2d", 4, 2, {}},  {"8a", 24, 8, {}},
            {"4b", 12, 4, {}}, {"8b", 24, 8, {}}, {"4c", 12, 4, {}}, {"4d", 6, 4, {}},
            {"6a", 32, 6, {}}, {"2e", 12, 2, {}},
        };
        auto row = [](std::initializer_list<complexd> v) { return std::vector<complexd>(v); };
        std::vector<std::vector<complexd>> chars = {
            row({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
            row({1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1}),
            row({1, -1, 1, 1, 1, 1, -1, -1, -1, 1, 1, 1, -1, -1}),
            row({1, 1, -1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, -1}),
            row({2, 0, 0, -1, 2, 2, -2, 0, 0, 0, 0, 2, 1, -2}),
            row({2, 0, 0, -1, 2, 2, 2, 0, 0, 0, 0, 2, -1, 2}),
            row({3, -1, -1, 0, -1, 3, 3, 1, -1, 1, -1, -1, 0, -1}),
            row({3, -1, 1, 0, -1, 3, -3, 1, -1, -1, 1, -1, 0, 1}),
            row({3, 1, -1, 0, -1, 3, -3, -1, 1, 1, -1, -1, 0, 1}),
            row({3, 1, 1, 0, -1, 3, 3, -1, 1, -1, 1, -1, 0, -1}),
            row({6, -2, 0, 0, 2, -2, 0, 0, 2, 0, 0, -2, 0, 0}),
            row({6, 0, -2, 0, -2, -2, 0, 0, 0, 0, 2, 2, 0, 0}),
            row({6, 0, 2, 0, -2, -2, 0, 0, 0, 0, -2, 2, 0, 0}),
            row({6, 2, 0, 0, 2, -2, 0, 0, -2, 0, 0, -2, 0, 0}),
        };
        const complexd e3 = E(3), e32 = E(3, 2), e4 = E(4);
        std::vector<std::vector<Matrix>> mats(14);
        mats[0] = {m1(1), m1(1), m1(1)};
        mats[1] = {m1(-1), m1(1), m1(-1)};
        mats[2] = {m1(-1), m1(1), m1(1)};
        mats[3] = {m1(1), m1(1), m1(-1)};
        mats[4] = {{{0, -1}, {-1, 0}}, {{e32, 0}, {0, e3}}, {{0, 1}, {1, 0}}};
        mats[5] = {{{0, 1}, {1, 0}}, {{e32, 0}, {0, e3}}, {{0, 1}, {1, 0}}};
        mats[6] = {{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                   {{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}};
        mats[7] = {{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                   {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
        mats[8] = {{{0, -1, 0}, {1, 0, 0}, {0, 0, -1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                   {{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}};
        mats[9] = {{{0, -1, 0}, {1, 0, 0}, {0, 0, -1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                   {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
        mats[10] = {{{0, 1, 0, 0, 0, 0}, {e4, 0, 0, 0, 0, 0}, {0, 0, e4, 0, 0, 0},
                     {0, 0, 0, 0, -e4, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, -e4}},
                    {{0, 0, 1, 0, 0, 0}, {-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0},
                     {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {0, 0, 0, 1, 0, 0}},
                    {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
                     {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}};
        mats[11] = {{{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
                     {-e4, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, e4, 0, 0, 0}},
                    {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, -e4}, {0, 0, 0, e4, 0, 0}, {0, 0, 0, 0, 1, 0}},
                    {{0, 0, -1, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, e4}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, -e4, 0, 0}}};
        mats[12] = {{{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
                     {-e4, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, e4, 0, 0, 0}},
                    {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, -e4}, {0, 0, 0, e4, 0, 0}, {0, 0, 0, 0, 1, 0}},
                    {{0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, -e4}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, e4, 0, 0}}};
        mats[13] = {{{0, 1, 0, 0, 0, 0}, {e4, 0, 0, 0, 0, 0}, {0, 0, -e4, 0, 0, 0},
                     {0, 0, 0, 0, -e4, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, e4}},
                    {{0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                     {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0}},
                    {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
                     {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}};
        const int dims[14] = {1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 6, 6, 6, 6};
        for (int i = 0; i < 14; ++i) {
            Irrep ir;
            ir.name = "chi" + std::to_string(i + 1);
            ir.dimension = dims[i];
            ir.generator_matrices = mats[i];
            ir.character_row = chars[i];
            t.irreps.push_back(std::move(ir));
        }
        return t;
    }();
    return table;
}

// ---- Bring surface (Appendix E): S5 x C2, character table only ----

const IrrepTable& bring_irreps() {
    static const IrrepTable table = [] {
        IrrepTable t;
        t.group_name = "bring";
        t.order = 240;
        t.classes = {
            {"1a", 1, 1, {}},   {"2a", 10, 2, {}},  {"2b", 15, 2, {}}, {"6a", 20, 6, {}},
            {"2c", 10, 2, {}},  {"3a", 20, 3, {}},  {"5a", 24, 5, {}}, {"4a", 30, 4, {}},
            {"6b", 20, 6, {}},  {"4b", 30, 4, {}},  {"6c", 20, 6, {}}, {"10a", 24, 10, {}},
            {"2d", 15, 2, {}},  {"2e", 1, 2, {}},
        };
        auto row = [](std::initializer_list<complexd> v) { return std::vector<complexd>(v); };
        std::vector<std::vector<complexd>> chars = {
            row({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
            row({1, -1, -1, 1, 1, 1, 1, -1, -1, 1, -1, -1, 1, -1}),
            row({1, -1, 1, -1, -1, 1, 1, -1, -1, -1, 1, 1, 1, 1}),
            row({1, 1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, 1, -1}),
            row({4, -2, 0, 1, -2, 1, -1, 0, 1, 0, 1, -1, 0, 4}),
            row({4, 2, 0, -1, 2, 1, -1, 0, -1, 0, 1, -1, 0, 4}),
            row({4, 2, 0, 1, -2, 1, -1, 0, -1, 0, -1, 1, 0, -4}),
            row({4, -2, 0, -1, 2, 1, -1, 0, 1, 0, -1, 1, 0, -4}),
            row({5, 1, 1, 1, 1, -1, 0, -1, 1, -1, -1, 0, 1, 5}),
            row({5, -1, 1, -1, -1, -1, 0, 1, -1, 1, -1, 0, 1, 5}),
            row({5, -1, -1, 1, 1, -1, 0, 1, -1, -1, 1, 0, 1, -5}),
            row({5, 1, -1, -1, -1, -1, 0, -1, 1, 1, 1, 0, 1, -5}),
            row({6, 0, -2, 0, 0, 0, 1, 0, 0, 0, 0, 1, -2, 6}),
            row({6, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, -1, -2, -6}),
        };
        const int dims[14] = {1, 1, 1, 1, 4, 4, 4, 4, 5, 5, 5, 5, 6, 6};
        for (int i = 0; i < 14; ++i) {
            Irrep ir;
            ir.name = "X" + std::to_string(i + 1);
            ir.dimension = dims[i];
            ir.character_row = chars[i];
            t.irreps.push_back(std::move(ir));
        }
        return t;
    }();
    return table;
}

}  // namespace hyplace::grouprep
