#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestbraid/caps.hpp"
#include "nestbraid/reflection_group.hpp"

namespace nestbraid {

/// Word in the Artin generators of B(W): letter +k is the k-th simple
/// generator (1-based, in the order of ReflectionGroupData::generators),
/// -k its inverse. `group` is the label of the group the word lives over.
struct BraidWord {
  std::vector<int> letters;
  std::string group;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
/// a^k for any integer k.
BraidWord power(const BraidWord& a, long k);

/// Delta^delta_power * simples[0] * simples[1] * ..., each simple a proper
/// nontrivial divisor of Delta and each adjacent pair left-weighted.
struct NormalForm {
  long delta_power = 0;
  std::vector<GroupElement> simples;
  friend bool operator==(const NormalForm& a, const NormalForm& b);
};

/// Garside structure of B(W) with the divisors of Delta (the lifts of the
/// elements of W) as simples.
class Garside {
 public:
  explicit Garside(ReflectionGroupData w);

  const ReflectionGroupData& group() const { return w_; }
  int rank() const { return w_.rank; }
  std::size_t positive_roots() const { return w_.positive_count; }

  BraidWord word(std::vector<int> letters) const;
  BraidWord generator(int k) const { return word({k}); }
  /// Tokens "s1 s1' S2" (capital letter for the inverse) or "1 -2 3".
  BraidWord parse(const std::string& text) const;
  std::string format(const BraidWord& w) const;

  NormalForm normal_form(const BraidWord& w) const;
  /// Delta^p followed by reduced words of the simples.
  BraidWord to_word(const NormalForm& nf) const;
  /// Throws InvalidInput when the words live over different groups.
  bool equal(const BraidWord& u, const BraidWord& v) const;
  /// Commutes with every generator.
  bool is_central(const BraidWord& w) const;

  /// Positive lift of the longest element: sigma_1 (sigma_2 sigma_1) ... for
  /// type A, (s1 s1' s2 ... s(n-1))^(n-1) for D_n, (s1 ... sn)^n for B_n and
  /// (st)^3 for G2.
  BraidWord delta() const;
  /// Positive lift of a bipartite Coxeter element: sigma_1 ... sigma_(n-1)
  /// for type A, (s1 s1' s3 s5 ...)(s2 s4 ...) for D_n, st for G2, and the
  /// generators in index order for B_n.
  BraidWord dual_delta() const;
  int coxeter_number() const;

  GroupElement image(const BraidWord& w) const;
  /// Delta^-1 sigma_k Delta = sigma_(tau[k-1]) (1-based values).
  const std::vector<int>& delta_automorphism() const { return tau_; }

  /// Descent sets of an element of W (0-based generator indices).
  std::vector<int> left_descents(const GroupElement& g) const;
  std::vector<int> right_descents(const GroupElement& g) const;
  /// Reduced word (1-based letters) taking the smallest left descent first.
  std::vector<int> reduced_word(const GroupElement& g) const;
  int length(const GroupElement& g) const;

 private:
  using Perm = RootPermutation;
  bool right_descent(const Perm& p, int i) const;
  bool left_descent(const Perm& p, int i) const;
  Perm inverse_perm(const Perm& p) const;
  void left_weight(std::vector<Perm>& simples, long& delta_power) const;
  GroupElement element(const Perm& p) const;

  ReflectionGroupData w_;
  std::vector<Perm> generators_;
  Perm identity_;
  Perm longest_;
  std::vector<int> tau_;
};

struct CenterReport {
  /// Generator of Z(B(W)): Delta if central, otherwise Delta^2.
  BraidWord beta;
  /// Generator of Z(P(W)): Delta^2.
  BraidWord pi;
  /// gcd of the degrees, equal to the brute-force |Z(W)|.
  int z_of_w = 1;
  bool beta_central = false;
  bool pi_central = false;
  bool relation_checked = false;
};

/// Throws ConsistencyError when gcd(degrees) differs from the brute-force
/// centre of W (skipped past max_group_order).
CenterReport center_report(const Garside& g, const Caps& caps = {});

/// Inertia elements of a parabolic W_J given by generator indices J (1-based).
/// zeta_A is the product over the irreducible components J_i of the
/// smallest central power of Delta_(J_i); z_A = Delta_J^2.
struct InertiaReport {
  std::vector<int> subset;
  std::vector<std::vector<int>> components;
  BraidWord delta;
  BraidWord z;
  BraidWord zeta;
  /// |Z(W_J)|, a product of 1s and 2s over the components.
  int center_order = 1;
  /// Positive lift of the conjugating element (empty for standard parabolics).
  BraidWord conjugator;
  bool z_central = false;
  bool zeta_central = false;
  /// zeta_i^|Z(W_(J_i))| = Delta_(J_i)^2 on every component.
  bool relation_checked = false;
};

/// Throws InvalidInput for an empty subset or an index out of range.
InertiaReport inertia_element(const Garside& g, const std::vector<int>& subset);

/// J with A = span of the simple roots in J, if A is a standard parabolic.
std::optional<std::vector<int>> standard_subset(const ReflectionGroupData& w, const Subspace& a);

/// For A = h B with B standard: z_A = h~ z_B h~^-1, h~ the positive lift of
/// h. The conjugation is verified; InvalidInput when h^-1 A is not standard.
InertiaReport inertia_element(const Garside& g, const Subspace& a, const GroupElement& h);
/// Shortest h with h^-1 A standard, scanning at most max_conjugation_search
/// elements; CapExceeded past the cap.
std::optional<GroupElement> find_conjugator(const Garside& g, const Subspace& a, const Caps& caps = {});

/// rank(g - 1), the number of reflections in a shortest reflection word.
int reflection_length(const GroupElement& g);
/// g <= c in the absolute order.
bool absolute_order_below(const ReflectionGroupData& w, const GroupElement& g, const GroupElement& c);
/// |{g : g <= c}| by exhaustive scan.
std::size_t count_below(const ReflectionGroupData& w, const GroupElement& c, const Caps& caps = {});

}  // namespace nestbraid
