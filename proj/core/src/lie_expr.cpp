#include "derlie/lie_expr.hpp"

#include <sstream>

#include "derlie/error.hpp"

namespace derlie {

LieExpr LieExpr::gen(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Gen;
  node->gen = std::move(name);
  return LieExpr(std::move(node));
}

LieExpr LieExpr::bracket(LieExpr a, LieExpr b) {
  if (a.isZero() || b.isZero()) return LieExpr();
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Bracket;
  node->left = a.root_;
  node->right = b.root_;
  return LieExpr(std::move(node));
}

LieExpr LieExpr::scale(Rat c, LieExpr e) {
  if (derlie::isZero(c) || e.isZero()) return LieExpr();
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Scale;
  node->scalar = std::move(c);
  node->inner = e.root_;
  return LieExpr(std::move(node));
}

LieExpr LieExpr::sum(std::vector<LieExpr> parts) {
  std::vector<NodePtr> kept;
  for (LieExpr& p : parts)
    if (!p.isZero()) kept.push_back(p.root_);
  if (kept.empty()) return LieExpr();
  if (kept.size() == 1) return LieExpr(std::move(kept.front()));
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Sum;
  node->summands = std::move(kept);
  return LieExpr(std::move(node));
}

namespace {

void printNode(const LieExpr::NodePtr& n, std::ostringstream& os) {
  using Kind = LieExpr::Node::Kind;
  switch (n->kind) {
    case Kind::Gen:
      os << n->gen;
      break;
    case Kind::Bracket:
      os << "[";
      printNode(n->left, os);
      os << ",";
      printNode(n->right, os);
      os << "]";
      break;
    case Kind::Scale:
      os << toString(n->scalar) << "*";
      printNode(n->inner, os);
      break;
    case Kind::Sum:
      for (std::size_t i = 0; i < n->summands.size(); ++i) {
        if (i) os << " + ";
        printNode(n->summands[i], os);
      }
      break;
  }
}

}  // namespace

std::string LieExpr::toString() const {
  if (isZero()) return "0";
  std::ostringstream os;
  printNode(root_, os);
  return os.str();
}

QuillenData::QuillenData(std::string name, std::vector<std::pair<std::string, int>> gens,
                         std::map<std::string, LieExpr> diff, std::optional<std::string> cellGen)
    : name_(std::move(name)), gens_(std::move(gens)), cellGen_(std::move(cellGen)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].second < 1)
      throw Error(errc::DimensionMismatch, "Quillen generator degrees must be >= 1");
    auto [it, fresh] = index_.emplace(gens_[i].first, i);
    if (!fresh) throw Error(errc::UnknownName, "duplicate generator name: " + gens_[i].first);
  }
  diff_.resize(gens_.size());
  for (auto& [genName, expr] : diff) {
    auto idx = genIndex(genName);
    if (!idx) throw Error(errc::UnknownName, "no generator named " + genName);
    if (!expr.isZero()) {
      auto deg = degreeOf(expr);
      if (!deg || *deg != gens_[*idx].second - 1)
        throw Error(errc::InhomogeneousImage,
                    "del(" + genName + ") must be homogeneous of degree " +
                        std::to_string(gens_[*idx].second - 1));
    }
    diff_[*idx] = std::move(expr);
  }
  if (cellGen_) {
    auto idx = genIndex(*cellGen_);
    if (!idx) throw Error(errc::UnknownName, "no cell generator named " + *cellGen_);
    // the attaching expression must not touch the cell itself
    TensorPoly p = expand(diff_[*idx]);
    for (const auto& [word, c] : p)
      for (std::size_t g : word)
        if (gens_[g].first == *cellGen_)
          throw Error(errc::DimensionMismatch, "del(" + *cellGen_ + ") must lie in L(B)");
  }
  if (auto bad = checkDiffSquare())
    throw Error(errc::NotACycle, "del o del != 0 on generator " + *bad);
}

std::optional<std::size_t> QuillenData::genIndex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int QuillenData::genDegree(const std::string& name) const {
  auto idx = genIndex(name);
  if (!idx) throw Error(errc::UnknownName, "no generator named " + name);
  return gens_[*idx].second;
}

const LieExpr& QuillenData::diffOf(const std::string& name) const {
  auto idx = genIndex(name);
  if (!idx) throw Error(errc::UnknownName, "no generator named " + name);
  return diff_[*idx];
}

std::optional<int> QuillenData::degreeOf(const LieExpr& e) const {
  if (e.isZero()) return std::nullopt;
  using Kind = LieExpr::Node::Kind;
  auto rec = [&](auto&& self, const LieExpr::NodePtr& n) -> std::optional<int> {
    switch (n->kind) {
      case Kind::Gen:
        return genDegree(n->gen);
      case Kind::Bracket: {
        auto l = self(self, n->left);
        auto r = self(self, n->right);
        if (!l || !r) return std::nullopt;
        return *l + *r;
      }
      case Kind::Scale:
        return self(self, n->inner);
      case Kind::Sum: {
        std::optional<int> deg;
        for (const auto& s : n->summands) {
          auto d = self(self, s);
          if (!d) return std::nullopt;
          if (deg && *deg != *d) return std::nullopt;
          deg = d;
        }
        return deg;
      }
    }
    return std::nullopt;
  };
  return rec(rec, e.root());
}

TensorPoly QuillenData::expand(const LieExpr& e) const {
  TensorPoly zero;
  if (e.isZero()) return zero;

  auto wordDegree = [&](const TensorWord& w) {
    int d = 0;
    for (std::size_t g : w) d += gens_[g].second;
    return d;
  };
  auto addTo = [](TensorPoly& p, const TensorWord& w, const Rat& c) {
    auto it = p.find(w);
    if (it == p.end()) {
      if (!isZero(c)) p.emplace(w, c);
    } else {
      it->second += c;
      if (isZero(it->second)) p.erase(it);
    }
  };

  using Kind = LieExpr::Node::Kind;
  auto rec = [&](auto&& self, const LieExpr::NodePtr& n) -> TensorPoly {
    TensorPoly out;
    switch (n->kind) {
      case Kind::Gen: {
        auto idx = genIndex(n->gen);
        if (!idx) throw Error(errc::UnmappedGenerator, "no generator named " + n->gen);
        out.emplace(TensorWord{*idx}, Rat(1));
        break;
      }
      case Kind::Bracket: {
        TensorPoly l = self(self, n->left);
        TensorPoly r = self(self, n->right);
        for (const auto& [wl, cl] : l) {
          for (const auto& [wr, cr] : r) {
            TensorWord ab = wl;
            ab.insert(ab.end(), wr.begin(), wr.end());
            addTo(out, ab, cl * cr);
            TensorWord ba = wr;
            ba.insert(ba.end(), wl.begin(), wl.end());
            Rat c = cl * cr;
            if ((wordDegree(wl) * wordDegree(wr)) % 2 == 0) c = -c;
            addTo(out, ba, c);
          }
        }
        break;
      }
      case Kind::Scale: {
        TensorPoly inner = self(self, n->inner);
        for (const auto& [w, c] : inner) addTo(out, w, n->scalar * c);
        break;
      }
      case Kind::Sum: {
        for (const auto& s : n->summands) {
          TensorPoly part = self(self, s);
          for (const auto& [w, c] : part) addTo(out, w, c);
        }
        break;
      }
    }
    return out;
  };
  return rec(rec, e.root());
}

LieExpr QuillenData::applyDiff(const LieExpr& e) const {
  if (e.isZero()) return LieExpr();
  using Kind = LieExpr::Node::Kind;
  auto rec = [&](auto&& self, const LieExpr::NodePtr& n) -> LieExpr {
    switch (n->kind) {
      case Kind::Gen:
        return diffOf(n->gen);
      case Kind::Bracket: {
        LieExpr left(n->left);
        LieExpr right(n->right);
        auto leftDeg = degreeOf(left);
        if (!leftDeg)
          throw Error(errc::InhomogeneousImage, "bracket factor must be homogeneous");
        LieExpr first = LieExpr::bracket(self(self, n->left), right);
        LieExpr second = LieExpr::bracket(left, self(self, n->right));
        if (*leftDeg % 2 != 0) second = LieExpr::scale(Rat(-1), second);
        return LieExpr::sum({std::move(first), std::move(second)});
      }
      case Kind::Scale:
        return LieExpr::scale(n->scalar, self(self, n->inner));
      case Kind::Sum: {
        std::vector<LieExpr> parts;
        for (const auto& s : n->summands) parts.push_back(self(self, s));
        return LieExpr::sum(std::move(parts));
      }
    }
    return LieExpr();
  };
  return rec(rec, e.root());
}

std::optional<std::string> QuillenData::checkDiffSquare() const {
  for (const auto& [name, idx] : index_) {
    const LieExpr& d1 = diff_[idx];
    if (d1.isZero()) continue;
    LieExpr d2 = applyDiff(d1);
    if (!expand(d2).empty()) return name;
  }
  return std::nullopt;
}

bool QuillenData::oddlyGraded() const {
  for (const auto& [name, degree] : gens_) {
    if (cellGen_ && name == *cellGen_) continue;
    if (degree % 2 == 0) return false;
  }
  return true;
}

}  // namespace derlie
