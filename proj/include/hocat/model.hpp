#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hocat/axioms.hpp"
#include "hocat/finite_bicat.hpp"
#include "hocat/limits.hpp"

namespace hocat {

// Which arrows count as weak equivalences, fibrations and cofibrations.
// Flat flags indexed by arrow id; the axiom checker verifies the
// closure properties instead of assuming them.
struct ArrowClasses {
  std::vector<char> isW;
  std::vector<char> isF;
  std::vector<char> isCoF;
};

// The data of a square
//
//           a
//       A -----> Y
//     i |   γ    | p
//       v   <=   v
//       X -----> B
//           b
//
// gamma: p*a => b*i, invertible.
struct LiftingSquare {
  int i = -1, p = -1;
  int a = -1, b = -1;
  int gamma = -1;
};

// A diagonal f: X -> Y for a LiftingSquare, with invertible comparison
// cells lambda: a => f*i and rho: p*f => b. The defining equation pastes
// the two triangles back to the square:
//
//   (rho * id_i) . (id_p * lambda) == gamma
struct Filler {
  int f = -1;
  int lambda = -1;
  int rho = -1;
};

// An arrow presented as p after i through mid, up to the invertible
// comparison iso: p*i => f.
struct Factorization {
  int i = -1, mid = -1, p = -1, iso = -1;
};

enum class FactorMode {
  TrivialCofibration,  // i in coF and W, p in F
  TrivialFibration,    // i in coF, p in F and W
};

std::string factorModeName(FactorMode m);

// A finite bicategory with arrow classes and a registry of limit
// witnesses. The registry is the instance knowledge the axiom checks
// run against: every registered witness must verify, and a shape with
// no registered witness imposes no condition. Immutable once built;
// the replacement memo lives in Replacement, not here.
struct ModelBicategory {
  FiniteBicategory B;
  ArrowClasses cls;
  std::map<std::array<int, 3>, LimitWitness> limits;

  bool inW(int f) const;
  bool inF(int f) const;
  bool inCoF(int f) const;

  // x0/x1 are the span or cospan arrow ids; pass nothing for
  // Initial/Terminal.
  const LimitWitness* limit(LimitKind k, int x0 = -1, int x1 = -1) const;
  void addLimit(const LimitWitness& w);

  // Lowest arrow from the registered initial object to X, or from X to
  // the registered terminal object; -1 when the witness is absent.
  int arrowFromInitial(int X) const;
  int arrowToTerminal(int X) const;
};

// Searches witnesses for Initial, Terminal and all four square shapes
// over every span and cospan, registering each one found. Quadratic in
// arrows times the witness search; meant for the small built-in tables.
void register_limits(ModelBicategory& M);

LimitKind dualLimitKind(LimitKind k);

// Arrow reversal: fibrations trade places with cofibrations, weak
// equivalences stay, every limit witness becomes one for the dual
// shape. The fibrant replacement is the cofibrant replacement here.
ModelBicategory opposite(const ModelBicategory& M);

bool verify_lifting_square(const FiniteBicategory& B, const LiftingSquare& sq,
                           std::string* why = nullptr);
bool verify_filler(const FiniteBicategory& B, const LiftingSquare& sq,
                   const Filler& fl, std::string* why = nullptr);

// All fillers of the square, lexicographic in (f, lambda, rho). Class
// eligibility of (i, p) is the caller's business; the search is pure.
std::vector<Filler> enumerate_fillers(const FiniteBicategory& B,
                                      const LiftingSquare& sq);

// First filler in enumeration order, if any.
std::optional<Filler> find_filler(const FiniteBicategory& B,
                                  const LiftingSquare& sq);

// Comparison cell between the diagonals of two squares over the same
// (i, p). Given fillers for both and cells alpha: a1 => a2,
// beta: b1 => b2 satisfying the compatibility hypothesis
//
//   gamma2 . (id_p * alpha) == (beta * id_i) . gamma1
//
// searches for delta: f1 => f2 with
//
//   lambda2 . alpha == (delta * id_i) . lambda1
//   rho2 . (id_p * delta) == beta . rho1
//
// A failed hypothesis is reported through why and is distinct from an
// unsuccessful search.
std::optional<int> find_filler_delta(const FiniteBicategory& B,
                                     const LiftingSquare& sq1,
                                     const LiftingSquare& sq2,
                                     const Filler& fl1, const Filler& fl2,
                                     int alpha, int beta,
                                     std::string* why = nullptr);

bool verify_factorization(const ModelBicategory& M, int f, FactorMode mode,
                          const Factorization& fact,
                          std::string* why = nullptr);

// Deterministic search. The two factorizations through an identity leg
// (id then f, f then id) are tried first, then mid objects, legs and
// comparison cells in ascending id order.
std::optional<Factorization> find_factorization(const ModelBicategory& M,
                                                int f, FactorMode mode);

// Axioms, one AxiomCheck each:
//   M0   every registered Initial/Terminal/Pullback/Pushout witness
//        verifies
//   M1   every square over an eligible pair (i in coF, p in F, one of
//        them in W) has a filler, and every compatible (alpha, beta)
//        between two such squares admits a delta
//   M2   every arrow factors in both modes
//   M3   fibrations and cofibrations compose, are closed under the
//        registered Pullbacks resp. Pushouts, contain every
//        equivalence, and all three classes are invariant under
//        invertible 2-cells
//   M4   the leg opposite a trivial fibration in a registered Pullback
//        is a weak equivalence; dually for Pushouts
//   M5   for every invertible comparison g*f => h, two of the three in
//        W force the third; every equivalence is in W
//   MM0  every registered Comma/coComma witness verifies
//   MM3  like M3's square closure over Comma/coComma witnesses
//   MM4  like M4 over Comma/coComma witnesses
// MM3 and MM4 short-circuit to a pass with a note when every 2-cell of
// the backend is invertible. which selects by name; empty means all.
AxiomReport check_model_axioms(const ModelBicategory& M,
                               const std::vector<std::string>& which = {});

struct Fibrancy {
  bool fibrant = true;
  bool cofibrant = true;
};

// Flags of the canonical arrows X -> terminal and initial -> X. A
// missing Initial or Terminal witness imposes no condition and leaves
// the vacuous default, in line with the registry semantics above.
Fibrancy fibrancy_status(const ModelBicategory& M, int X);

// A weak equivalence split as a w-section followed by a w-retraction:
//   iso:    p*i => f        through fact.mid
//   retIso: r*i => id_src   r a retraction for i
//   secIso: p*s => id_dst   s a section for p
// Both comparison cells invertible; i and p are weak equivalences.
struct WSplitFactorization {
  Factorization fact;
  int r = -1, retIso = -1;
  int s = -1, secIso = -1;
  Fibrancy midStatus;
};

// Requires f in W, source fibrant, target cofibrant. Factors f as a
// trivial cofibration i then a fibration p, then finds the retraction
// and section by lifting against the canonical arrows to the terminal
// resp. from the initial object; when those witnesses are absent the
// same data is searched directly. Failure reasons land in why.
std::optional<WSplitFactorization> factor_weq_as_wsplit(
    const ModelBicategory& M, int f, std::string* why = nullptr);

// Memoized cofibrant (Q) and fibrant (R) replacement.
//
// Q side: qObj(X) is a cofibrant object with a trivial fibration
// pArr(X): QX -> X, the identity when X is already cofibrant. qArr(f)
// lifts f to QX -> QY with the invertible comparison
//
//   rhoCell(f): p_Y * Qf => f * p_X
//
// and qCell(mu): Qf => Qg satisfies p_Y * Qmu == rho_g^{-1} . (mu *
// p_X) . rho_f. When both endpoints are cofibrant the choices collapse
// to Qf = f, rho = id, Qmu = mu.
//
// R side: the same construction run in the opposite bicategory.
// iArr(X): X -> RX is a trivial cofibration, and
//
//   lambdaCell(f): i_Y * f => Rf * i_X
//
// with the dual normalization on fibrant endpoints.
//
// Every entry is computed once and reused; failures throw
// std::runtime_error naming the missing search result. Not safe for
// concurrent mutation; share one instance per thread or compute
// entries up front.
class Replacement {
 public:
  explicit Replacement(const ModelBicategory& M);

  int qObj(int X);
  int pArr(int X);
  int qArr(int f);
  int rhoCell(int f);
  int qCell(int mu);

  int rObj(int X);
  int iArr(int X);
  int rArr(int f);
  int lambdaCell(int f);
  int rCell(int mu);

 private:
  struct ArrowEntry {
    int arr = -1;
    int rho = -1;
    bool degenerate = false;
    LiftingSquare sq;
    Filler fl;
  };
  struct Side {
    const ModelBicategory* M = nullptr;
    std::map<int, int> obj;
    std::map<int, int> p;
    std::map<int, ArrowEntry> arr;
    std::map<int, int> cell;
  };

  void ensureObj(Side& s, int X);
  void ensureArr(Side& s, int f);
  void ensureCell(Side& s, int mu);

  const ModelBicategory* M_;
  ModelBicategory Mop_;
  Side q_;
  Side r_;
};

}  // namespace hocat
