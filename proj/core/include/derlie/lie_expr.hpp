#ifndef DERLIE_LIE_EXPR_HPP
#define DERLIE_LIE_EXPR_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derlie/rational.hpp"

namespace derlie {

/// Bracket-expression tree over named DGL generators. Expressions are
/// evaluated, never canonicalized; zero is the empty sum.
class LieExpr {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    enum class Kind { Gen, Bracket, Scale, Sum } kind;
    std::string gen;          // Kind::Gen
    NodePtr left, right;      // Kind::Bracket
    Rat scalar;               // Kind::Scale
    NodePtr inner;            // Kind::Scale
    std::vector<NodePtr> summands;  // Kind::Sum
  };

  LieExpr() = default;  // zero

  static LieExpr gen(std::string name);
  static LieExpr bracket(LieExpr a, LieExpr b);
  static LieExpr scale(Rat c, LieExpr e);
  static LieExpr sum(std::vector<LieExpr> parts);

  bool isZero() const { return !root_; }
  const NodePtr& root() const { return root_; }

  std::string toString() const;

 private:
  friend class QuillenData;
  explicit LieExpr(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

/// Free word algebra expansion: the free Lie algebra embeds into the tensor
/// algebra by [a,b] -> ab - (-1)^{|a||b|} ba, so an expression vanishes in
/// L(B) exactly when its word expansion vanishes. Words are sequences of
/// generator indices.
using TensorWord = std::vector<std::size_t>;
using TensorPoly = std::map<TensorWord, Rat>;

/// Quillen presentation of a space: free DGL generators with degrees and
/// differential expressions, plus optionally one marked cell generator u
/// with del(u) inside the subalgebra on the other generators.
class QuillenData {
 public:
  QuillenData(std::string name, std::vector<std::pair<std::string, int>> gens,
              std::map<std::string, LieExpr> diff,
              std::optional<std::string> cellGen = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t genCount() const { return gens_.size(); }
  const std::pair<std::string, int>& gen(std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> genIndex(const std::string& name) const;
  int genDegree(const std::string& name) const;
  const LieExpr& diffOf(const std::string& name) const;
  const std::optional<std::string>& cell() const { return cellGen_; }

  /// Degree of a homogeneous expression; throws on inhomogeneous sums.
  std::optional<int> degreeOf(const LieExpr& e) const;

  /// Expand into the tensor algebra (exact; implements the graded Leibniz
  /// rule for del and the commutator expansion of brackets).
  TensorPoly expand(const LieExpr& e) const;

  /// Formal boundary of an expression via del[a,b] = [del a, b] +
  /// (-1)^{|a|} [a, del b].
  LieExpr applyDiff(const LieExpr& e) const;

  /// del o del = 0 on every generator, decided in the tensor algebra.
  /// Returns the offending generator name if any.
  std::optional<std::string> checkDiffSquare() const;

  /// True when every generator has odd degree (evenly graded cohomology of
  /// the space, e.g. B a compact Lie group classifying space).
  bool oddlyGraded() const;

 private:
  std::string name_;
  std::vector<std::pair<std::string, int>> gens_;
  std::map<std::string, std::size_t> index_;
  std::vector<LieExpr> diff_;
  std::optional<std::string> cellGen_;
};

}  // namespace derlie

#endif
