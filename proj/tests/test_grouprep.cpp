#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "hyplace/grouprep.hpp"

using namespace hyplace::grouprep;
using complexd = std::complex<double>;

namespace {

Matrix mul(const Matrix& A, const Matrix& B) {
    const size_t n = A.size();
    Matrix C(n, std::vector<complexd>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

double dist_to_identity(const Matrix& M) {
    double worst = 0;
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j)
            worst = std::max(worst, std::abs(M[i][j] - (i == j ? complexd(1) : complexd(0))));
    return worst;
}

Matrix word_mat(const Irrep& ir, const Word& w) {
    Matrix P(ir.dimension, std::vector<complexd>(ir.dimension, 0));
    for (int i = 0; i < ir.dimension; ++i) P[i][i] = 1;
    for (int g : w) {
        REQUIRE(g > 0);
        P = mul(P, ir.generator_matrices[g - 1]);
    }
    return P;
}

}  // namespace

TEST_CASE("coset enumeration orders") {
    CHECK(enumerate(bolza_presentation()).order == 96);
    CHECK(enumerate(klein_presentation()).order == 336);
    CHECK(enumerate(fermat_presentation()).order == 192);
    CHECK(enumerate(bring_presentation()).order == 240);

    // an infinite group trips the coset cap
    GroupPresentation free2;
    free2.generators = {"a", "b"};
    free2.relations = {};
    CHECK_THROWS_AS(enumerate(free2, 2000), enumeration_error);

    // undeclared generator in a relation
    GroupPresentation bad;
    bad.generators = {"a"};
    bad.relations = {Word{2}};
    CHECK_THROWS_AS(enumerate(bad), enumeration_error);
}

TEST_CASE("triangle action and relations") {
    const auto& act = bolza_action();
    REQUIRE(act.labels.size() == 16);

    const auto R = act.apply_word("R");
    const auto find = [&](const std::string& lab) {
        for (int i = 0; i < 16; ++i)
            if (act.labels[i] == lab) return i;
        return -1;
    };
    CHECK(R[find("P1Q1Q2")] == find("P1Q2Q3"));
    // the worked example RS(P1Q1Q2) = P1 Q4~ Q1
    const auto RS = act.apply_word("RS");
    CHECK(RS[find("P1Q1Q2")] == find("P1Q4~Q1"));
    // U^3 = identity on all triangles
    const auto U3 = act.apply_word("UUU");
    for (int i = 0; i < 16; ++i) CHECK(U3[i] == i);

    // all eleven relations hold; the uncorrected one fails
    for (const auto& rep : verify_bolza_relations()) {
        INFO(rep.relation);
        CHECK(rep.holds);
    }
    const auto bad = verify_uncorrected_relation();
    CHECK_FALSE(bad.holds);
    CHECK(!bad.violating_triangles.empty());
}

TEST_CASE("canonical forms") {
    CHECK(bolza_elements().size() == 96);

    const auto id = canonical_form("RRRRRRRR");
    CHECK(std::tie(id.i, id.j, id.k, id.l) == std::make_tuple(0, 0, 0, 0));

    // R^4 is central: canonical_form(R^4 X) == canonical_form(X R^4)
    for (const auto& cf : bolza_elements()) {
        std::string w;
        w.append(cf.i, 'R');
        w.append(cf.j, 'S');
        w.append(cf.k, 'T');
        w.append(cf.l, 'U');
        const auto a = canonical_form("RRRR" + w);
        const auto b = canonical_form(w + "RRRR");
        CHECK(std::tie(a.i, a.j, a.k, a.l) == std::tie(b.i, b.j, b.k, b.l));
    }

    CHECK_THROWS_AS(canonical_form("RX"), assignment_error);

    // orientation parity: the reflection count mod 2 is the chi2 value and
    // matches the canonical form's (j + k) parity for arbitrary words
    const auto& chi2 = bolza_irreps().irreps[1];
    auto sign_of_word = [&](const std::string& w) {
        double s = 1;
        for (char c : w) s *= chi2.generator_matrices[std::string("RSTU").find(c)][0][0].real();
        return s;
    };
    CHECK(sign_of_word("RSTU") == 1.0);
    CHECK(sign_of_word("RSU") == -1.0);
    CHECK(sign_of_word("RTU") == -1.0);
    for (const std::string w : {"RSTSRT", "UTSR", "RRSTU", "STSTS", "URTUS"}) {
        const auto cf = canonical_form(w);
        CHECK(sign_of_word(w) == ((cf.j + cf.k) % 2 ? -1.0 : 1.0));
    }
}

TEST_CASE("centre") {
    const auto c = bolza_centre();
    REQUIRE(c.size() == 2);
    CHECK(std::tie(c[0].i, c[0].j, c[0].k, c[0].l) == std::make_tuple(0, 0, 0, 0));
    CHECK(std::tie(c[1].i, c[1].j, c[1].k, c[1].l) == std::make_tuple(4, 0, 0, 0));

    // abelian test group: every conjugacy class is a singleton
    GroupPresentation z6;
    z6.generators = {"a", "b"};
    z6.relations = {Word{1, 1}, Word{2, 2, 2}, Word{1, 2, -1, -2}};
    const auto g = enumerate(z6);
    CHECK(g.order == 6);
    CHECK(conjugacy_classes(g).size() == 6);
}

TEST_CASE("embedded irreps satisfy the presentation relations") {
    struct Named {
        const IrrepTable* t;
        GroupPresentation p;
    };
    const std::vector<Named> all = {{&bolza_irreps(), bolza_presentation()},
                                    {&klein_irreps(), klein_presentation()},
                                    {&fermat_irreps(), fermat_presentation()}};
    for (const auto& [t, p] : all) {
        for (const auto& ir : t->irreps) {
            if (ir.generator_matrices.empty()) continue;
            for (const auto& rel : p.relations) {
                INFO(t->group_name, " ", ir.name);
                CHECK(dist_to_identity(word_mat(ir, rel)) < 1e-10);
            }
        }
    }
}

TEST_CASE("character tables: dims, orthogonality, class data") {
    struct Named {
        const IrrepTable* t;
        GroupPresentation p;
    };
    const std::vector<Named> all = {{&bolza_irreps(), bolza_presentation()},
                                    {&klein_irreps(), klein_presentation()},
                                    {&fermat_irreps(), fermat_presentation()},
                                    {&bring_irreps(), bring_presentation()}};
    for (const auto& [t, p] : all) {
        INFO(t->group_name);
        const auto g = enumerate(p);
        CHECK(g.order == t->order);

        int dimsq = 0, sizes = 0;
        for (const auto& ir : t->irreps) dimsq += ir.dimension * ir.dimension;
        for (const auto& c : t->classes) sizes += c.size;
        CHECK(dimsq == t->order);
        CHECK(sizes == t->order);

        // class list matches the enumeration: same multiset of (order, size)
        const auto classes = conjugacy_classes(g);
        CHECK(classes.size() == t->classes.size());
        std::multiset<std::pair<int, int>> got, want;
        for (const auto& c : classes) got.insert({c.element_order, c.size});
        for (const auto& c : t->classes) want.insert({c.element_order, c.size});
        CHECK(got == want);

        for (const auto& ir : t->irreps) {
            CHECK(std::abs(ir.character_row[0] - complexd(ir.dimension)) < 1e-12);
            // orthogonality: sum over classes of |class| |chi|^2 = |G|
            double s = 0;
            for (size_t c = 0; c < t->classes.size(); ++c)
                s += t->classes[c].size * std::norm(ir.character_row[c]);
            CHECK(s == doctest::Approx(double(t->order)).epsilon(1e-12));
        }
    }
}

TEST_CASE("bolza class representatives match their columns") {
    const auto& t = bolza_irreps();
    const auto g = enumerate(bolza_presentation());
    for (size_t c = 1; c < t.classes.size(); ++c) {
        INFO(t.classes[c].name);
        CHECK(g.order_of(t.classes[c].representative) == t.classes[c].element_order);
        for (const auto& ir : t.irreps) {
            if (ir.generator_matrices.empty()) continue;
            const auto M = word_mat(ir, t.classes[c].representative);
            complexd tr = 0;
            for (size_t i = 0; i < M.size(); ++i) tr += M[i][i];
            CHECK(std::abs(tr - ir.character_row[c]) < 1e-9);
        }
    }
    // chi8(identity) = 3 and chi11(R^4) = -4 straight from the table
    CHECK(std::abs(t.irreps[7].character_row[0] - complexd(3)) < 1e-14);
    CHECK(std::abs(t.irreps[10].character_row[5] - complexd(-4)) < 1e-14);
    const auto chiR4 = character(t, g, 10, Word{1, 1, 1, 1});
    CHECK(std::abs(chiR4 - complexd(-4)) < 1e-9);
}

TEST_CASE("group text report") {
    const auto rep = group_text_report(bolza_irreps());
    CHECK(rep.find("order 96") != std::string::npos);
    CHECK(rep.find("sum-dim-squared 96") != std::string::npos);
    CHECK(group_text_report(klein_irreps()).find("order 336") != std::string::npos);
    CHECK(group_text_report(bring_irreps()).find("order 240") != std::string::npos);
}

TEST_CASE("boundary assignments: one-dimensional irreps on the triangle") {
    // chi1: all Neumann, closure is the whole surface
    const auto ba1 = boundary_assignment("bolza", 0, "triangle238");
    REQUIRE(ba1.size() == 1);
    for (const auto& e : ba1[0].edges) CHECK(e.condition == Condition::Neumann);
    CHECK(*ba1[0].closed_dirichlet_area == doctest::Approx(4 * M_PI).epsilon(1e-12));

    // chi2: all Dirichlet, area pi/24
    const auto ba2 = boundary_assignment("bolza", 1, "triangle238");
    for (const auto& e : ba2[0].edges) CHECK(e.condition == Condition::Dirichlet);
    CHECK(*ba2[0].closed_dirichlet_area == doctest::Approx(M_PI / 24).epsilon(1e-12));

    // chi3: the (4,4,4) triangle of area pi/4; chi4: the doubled triangle pi/12
    CHECK(*boundary_assignment("bolza", 2, "triangle238")[0].closed_dirichlet_area ==
          doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(*boundary_assignment("bolza", 3, "triangle238")[0].closed_dirichlet_area ==
          doctest::Approx(M_PI / 12).epsilon(1e-12));
}

TEST_CASE("boundary assignments: higher dimensions") {
    // chi5 (u = e1 - e2): everything Dirichlet, area pi/8
    const auto ba5 = boundary_assignment("bolza", 4, "half444");
    REQUIRE(ba5.size() == 1);
    for (const auto& e : ba5[0].edges) CHECK(e.condition == Condition::Dirichlet);
    CHECK(*ba5[0].closed_dirichlet_area == doctest::Approx(M_PI / 8).epsilon(1e-12));

    // chi6: only the real-line reflection is Dirichlet; area pi
    const auto ba6 = boundary_assignment("bolza", 5, "half444");
    for (const auto& e : ba6[0].edges)
        CHECK(e.condition == (e.word == "S" ? Condition::Dirichlet : Condition::Neumann));
    CHECK(*ba6[0].closed_dirichlet_area == doctest::Approx(M_PI).epsilon(1e-12));

    // chi8, basis e3: S, RS, R7S Neumann and T Dirichlet; closure 2 pi
    const auto ba8 = boundary_assignment("bolza", 7, "half444");
    REQUIRE(ba8.size() == 3);
    const auto& e3 = ba8[2];
    CHECK_FALSE(e3.eigenvector_failure);
    for (const auto& e : e3.edges)
        CHECK(e.condition == (e.word == "T" ? Condition::Dirichlet : Condition::Neumann));
    CHECK(*e3.closed_dirichlet_area == doctest::Approx(2 * M_PI).epsilon(1e-12));
    // e1 and e2 are swapped by S rather than being +-1 eigenvectors; the
    // failure is reported, not guessed
    CHECK(ba8[0].eigenvector_failure);
    CHECK(ba8[1].eigenvector_failure);
    // their diagonal words still carry the Section 3.4 sign patterns
    for (const auto& e : ba8[0].edges) {
        if (e.word == "T" || e.word == "RS") CHECK(e.condition == Condition::Neumann);
        if (e.word == "RRRRRRRS") CHECK(e.condition == Condition::Dirichlet);
    }

    // chi9 e3: area pi/4; chi10 e3: area pi/2 (the binding bound per irrep)
    CHECK(*boundary_assignment("bolza", 8, "half444")[2].closed_dirichlet_area ==
          doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(*boundary_assignment("bolza", 9, "half444")[2].closed_dirichlet_area ==
          doctest::Approx(M_PI / 2).epsilon(1e-12));
}

TEST_CASE("boundary assignments: pentagon vectors for the 4-dimensional irreps") {
    for (int idx : {10, 11, 12}) {
        const auto bas = boundary_assignment("bolza", idx, "pentagon");
        REQUIRE(bas.size() == 1);
        const auto& ba = bas[0];
        INFO(ba.irrep);
        CHECK_FALSE(ba.eigenvector_failure);
        std::map<std::string, Condition> by_edge;
        for (const auto& e : ba.edges) by_edge[e.edge_id] = e.condition;
        // Dirichlet on G1, G3 (conjugates of T) and G5 (S); Neumann on
        // G2 (R^4T) and G4 (R^4S): the swap partner of the appendix problem
        CHECK(by_edge["g1"] == Condition::Dirichlet);
        CHECK(by_edge["g3"] == Condition::Dirichlet);
        CHECK(by_edge["g5"] == Condition::Dirichlet);
        CHECK(by_edge["g2"] == Condition::Neumann);
        CHECK(by_edge["g4"] == Condition::Neumann);
        CHECK_FALSE(ba.closed_dirichlet_area.has_value());  // annulus: no Faber-Krahn
    }
}

TEST_CASE("klein one-dimensional assignments") {
    const auto rho2 = boundary_assignment("klein", 1, "triangle237");
    REQUIRE(rho2.size() == 1);
    for (const auto& e : rho2[0].edges) CHECK(e.condition == Condition::Dirichlet);
    CHECK(*rho2[0].closed_dirichlet_area == doctest::Approx(M_PI / 42).epsilon(1e-12));

    const auto rho1 = boundary_assignment("klein", 0, "triangle237");
    for (const auto& e : rho1[0].edges) CHECK(e.condition == Condition::Neumann);

    CHECK_THROWS_AS(boundary_assignment("klein", 2, "triangle237"), assignment_error);
}
