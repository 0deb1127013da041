#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Finitely presented isometry groups of the target surfaces: coset
// enumeration, the Bolza triangle action, canonical forms, embedded
// irreducible representations, and Dirichlet/Neumann boundary-condition
// synthesis per representation.

namespace hyplace::grouprep {

using complexd = std::complex<double>;
using Matrix = std::vector<std::vector<complexd>>;  // row-major square
using Word = std::vector<int>;  // signed 1-based generator indices; -k = inverse

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relations;
    void validate() const;
};

GroupPresentation bolza_presentation();
GroupPresentation klein_presentation();
GroupPresentation fermat_presentation();
GroupPresentation bring_presentation();

// Todd-Coxeter (HLT) coset enumeration over the trivial subgroup.
struct EnumeratedGroup {
    GroupPresentation presentation;
    int order = 0;
    // Regular action: perm[g][c] = image coset of c under generator g+1.
    std::vector<std::vector<int>> gen_perms;
    std::vector<std::vector<int>> inv_perms;

    std::vector<int> element_of(const Word& w) const;  // permutation of the word
    int order_of(const Word& w) const;
    std::vector<int> identity() const;
};

struct enumeration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EnumeratedGroup enumerate(const GroupPresentation& pres, int coset_cap = 1000000);

// Conjugacy classes of an enumerated group.
struct ConjugacyClass {
    Word representative;
    int size = 0;
    int element_order = 0;
};
std::vector<ConjugacyClass> conjugacy_classes(const EnumeratedGroup& g);

// ---- Bolza 16-triangle action (Table 3.1) ----

struct BolzaAction {
    std::vector<std::string> labels;  // 16 triangle labels
    // action[g][i] = index of the image of triangle i under generator g
    // (0=R, 1=S, 2=T, 3=U).
    int apply_gen(int gen, int triangle) const;
    std::vector<int> apply_word(const std::string& word) const;  // over "RSTU"
    std::vector<std::vector<int>> action;
};
const BolzaAction& bolza_action();

struct RelationReport {
    std::string relation;
    bool holds;
    std::vector<int> violating_triangles;
};
// Verifies each named relation word pair acts identically on all triangles.
std::vector<RelationReport> verify_bolza_relations();
// The uncorrected UR = RU^2 for contrast.
RelationReport verify_uncorrected_relation();

struct CanonicalForm {
    int i, j, k, l;  // R^i S^j T^k U^l
};
// Rewrites any word over R,S,T,U (and lowercase inverses) to canonical form
// via the faithful triangle action.
CanonicalForm canonical_form(const std::string& word);
std::vector<CanonicalForm> bolza_elements();  // all 96

// Elements commuting with every generator, by brute force over the action.
std::vector<CanonicalForm> bolza_centre();

// ---- Irreducible representation tables ----

struct Irrep {
    std::string name;
    int dimension;
    std::vector<Matrix> generator_matrices;       // one per generator; may be empty
    std::vector<complexd> character_row;          // per conjugacy class
};

struct CharacterClass {
    std::string name;
    int size;
    int element_order;
    Word representative;  // verified against the enumeration
};

struct IrrepTable {
    std::string group_name;
    int order;
    std::vector<CharacterClass> classes;
    std::vector<Irrep> irreps;
};

const IrrepTable& bolza_irreps();
const IrrepTable& klein_irreps();
const IrrepTable& fermat_irreps();
const IrrepTable& bring_irreps();

// chi_rho(g) = Tr(rho(g)) for irreps with matrices; falls back to the
// character row via class identification.
complexd character(const IrrepTable& table, const EnumeratedGroup& g, int irrep_index,
                   const Word& element);

// Structured text export for diffing against the appendix listings.
std::string group_text_report(const IrrepTable& table);

// ---- Boundary assignments ----

enum class Condition { Dirichlet, Neumann, Mixed };

struct EdgeAssignment {
    std::string edge_id;
    std::string word;
    Condition condition;
};

struct BoundaryAssignment {
    std::string domain_id;
    std::string irrep;
    int vector_index;
    std::vector<EdgeAssignment> edges;
    std::optional<double> closed_dirichlet_area;
    bool eigenvector_failure = false;  // some edge word had no +-1 eigenvalue
    std::string note;
};

// Domains: "triangle238" (one-dimensional irreps), "half444" (dims 2-3),
// "pentagon" (dims 4).  Uses the embedded edge-word tables and the paper's
// candidate vectors.
std::vector<BoundaryAssignment> boundary_assignment(const std::string& surface,
                                                    int irrep_index,
                                                    const std::string& domain_id);

struct assignment_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hyplace::grouprep
