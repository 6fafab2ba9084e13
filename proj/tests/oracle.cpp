#include "oracle.hpp"

#include <algorithm>

namespace derlie::tests::oracle {

std::optional<std::pair<Word, int>> normalize(const SullivanModel& m, Word w) {
  // bubble sort, one odd-odd swap at a time
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        bool oddA = m.algebra().gen(w[i]).odd();
        bool oddB = m.algebra().gen(w[i + 1]).odd();
        std::swap(w[i], w[i + 1]);
        if (oddA && oddB) sign = -sign;
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1] && m.algebra().gen(w[i]).odd()) return std::nullopt;
  return std::make_pair(std::move(w), sign);
}

Elem convert(const SullivanModel&, const AlgElement& e) {
  Elem out;
  for (const auto& [mono, coeff] : e.terms) {
    Word w;
    for (std::size_t g = 0; g < mono.size(); ++g)
      for (std::uint32_t k = 0; k < mono[g]; ++k) w.push_back(g);
    out[w] = coeff;  // already canonical: ascending generator indices
  }
  return out;
}

Elem add(Elem a, const Elem& b) {
  for (const auto& [w, c] : b) {
    auto it = a.find(w);
    if (it == a.end()) {
      if (!isZero(c)) a.emplace(w, c);
    } else {
      it->second += c;
      if (isZero(it->second)) a.erase(it);
    }
  }
  return a;
}

Elem scale(const Rat& c, const Elem& e) {
  Elem out;
  if (isZero(c)) return out;
  for (const auto& [w, x] : e) out.emplace(w, c * x);
  return out;
}

Elem mul(const SullivanModel& m, const Elem& a, const Elem& b) {
  Elem out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Word cat = wa;
      cat.insert(cat.end(), wb.begin(), wb.end());
      auto norm = normalize(m, std::move(cat));
      if (!norm) continue;
      Rat c = ca * cb;
      if (norm->second < 0) c = -c;
      auto it = out.find(norm->first);
      if (it == out.end()) {
        if (!isZero(c)) out.emplace(std::move(norm->first), std::move(c));
      } else {
        it->second += c;
        if (isZero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

Elem applyDer(const SullivanModel& m, const std::vector<Elem>& images, int shift,
              const Elem& target) {
  Elem out;
  for (const auto& [word, coeff] : target) {
    int prefixDegree = 0;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
      const Elem& image = images[word[pos]];
      if (!image.empty()) {
        Elem prefix, suffix;
        Word wPrefix(word.begin(), word.begin() + static_cast<long>(pos));
        Word wSuffix(word.begin() + static_cast<long>(pos) + 1, word.end());
        prefix.emplace(std::move(wPrefix), Rat(1));
        suffix.emplace(std::move(wSuffix), Rat(1));
        Elem term = mul(m, prefix, mul(m, image, suffix));
        Rat c = coeff;
        if ((shift * prefixDegree) % 2 != 0) c = -c;
        out = add(std::move(out), scale(c, term));
      }
      prefixDegree += m.algebra().gen(word[pos]).degree;
    }
  }
  return out;
}

std::vector<Elem> diffImages(const SullivanModel& m) {
  std::vector<Elem> out;
  for (std::size_t g = 0; g < m.genCount(); ++g) out.push_back(convert(m, m.diffOf(g)));
  return out;
}

namespace {

void growWords(const SullivanModel& m, int remaining, std::size_t fromGen, Word& cur,
               std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t g = fromGen; g < m.genCount(); ++g) {
    int d = m.algebra().gen(g).degree;
    if (d > remaining) continue;
    if (m.algebra().gen(g).odd() && !cur.empty() && cur.back() == g) continue;
    cur.push_back(g);
    growWords(m, remaining - d, m.algebra().gen(g).odd() ? g + 1 : g, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> wordsOfDegree(const SullivanModel& m, int degree) {
  std::vector<Word> out;
  if (degree < 0) return out;
  Word cur;
  growWords(m, degree, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t rank(DenseMatrix a) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && isZero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (isZero(a[i][c])) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

bool inColumnSpan(const DenseMatrix& a, const std::vector<Rat>& v) {
  if (a.empty() || a[0].empty()) {
    for (const Rat& x : v)
      if (!isZero(x)) return false;
    return true;
  }
  DenseMatrix augmented = a;
  for (std::size_t r = 0; r < augmented.size(); ++r) augmented[r].push_back(v[r]);
  return rank(a) == rank(augmented);
}

ElemBasis derBasis(const SullivanModel& m, int shift, std::size_t firstGen) {
  ElemBasis basis;
  for (std::size_t g = firstGen; g < m.genCount(); ++g) {
    int target = m.algebra().gen(g).degree - shift;
    if (target < 0) continue;
    for (Word& w : wordsOfDegree(m, target)) basis.items.emplace_back(g, std::move(w));
  }
  return basis;
}

DenseMatrix boundaryMatrix(const SullivanModel& m, int shift, std::size_t firstGen) {
  ElemBasis from = derBasis(m, shift, firstGen);
  ElemBasis to = derBasis(m, shift - 1, firstGen);
  std::map<std::pair<std::size_t, Word>, std::size_t> index;
  for (std::size_t i = 0; i < to.items.size(); ++i) index.emplace(to.items[i], i);

  DenseMatrix mat(to.items.size(), std::vector<Rat>(from.items.size(), Rat(0)));
  std::vector<Elem> d = diffImages(m);
  int sign = shift % 2 == 0 ? 1 : -1;

  for (std::size_t c = 0; c < from.items.size(); ++c) {
    const auto& [gen, word] = from.items[c];
    std::vector<Elem> sigma(m.genCount());
    sigma[gen].emplace(word, Rat(1));
    // boundary(sigma)(h) = d(sigma(h)) - (-1)^shift sigma(d(h))
    for (std::size_t h = 0; h < m.genCount(); ++h) {
      Elem dh;
      dh.emplace(Word{h}, Rat(1));
      Elem first = applyDer(m, d, -1, applyDer(m, sigma, shift, dh));
      Elem second = applyDer(m, sigma, shift, applyDer(m, d, -1, dh));
      Elem value = add(std::move(first), scale(Rat(-sign), second));
      for (const auto& [w, coeff] : value) {
        auto it = index.find(std::make_pair(h, w));
        if (it != index.end()) mat[it->second][c] = coeff;
        // components on generators below firstGen do not occur for the fiber
        // sub-DGL; for the full complex every generator is indexed
      }
    }
  }
  return mat;
}

std::size_t homologyDim(const SullivanModel& m, int n, std::size_t firstGen) {
  if (n < 1) return 0;
  std::size_t chainDim = derBasis(m, n, firstGen).items.size();
  std::size_t rankIn = rank(boundaryMatrix(m, n, firstGen));
  std::size_t rankOut = rank(boundaryMatrix(m, n + 1, firstGen));
  // cycles; in degree 1 the chain group itself is ker(del_1), which is the
  // same number
  std::size_t cycles = chainDim - rankIn;
  return cycles - rankOut;
}

std::size_t cohomologyDim(const SullivanModel& m, int n) {
  if (n < 0) return 0;
  std::vector<Elem> d = diffImages(m);
  auto matrixOf = [&](int fromDeg) {
    std::vector<Word> from = wordsOfDegree(m, fromDeg);
    std::vector<Word> to = wordsOfDegree(m, fromDeg + 1);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < to.size(); ++i) index.emplace(to[i], i);
    DenseMatrix mat(to.size(), std::vector<Rat>(from.size(), Rat(0)));
    for (std::size_t c = 0; c < from.size(); ++c) {
      Elem x;
      x.emplace(from[c], Rat(1));
      for (const auto& [w, coeff] : applyDer(m, d, -1, x)) mat[index.at(w)][c] = coeff;
    }
    return mat;
  };
  std::size_t dim = wordsOfDegree(m, n).size();
  std::size_t rankOut = rank(matrixOf(n));
  std::size_t rankIn = n == 0 ? 0 : rank(matrixOf(n - 1));
  return dim - rankOut - rankIn;
}

bool isFiberBoundary(const SullivanModel& m, std::size_t firstGen, int n,
                     const std::vector<Rat>& coordsInElemBasis) {
  DenseMatrix b = boundaryMatrix(m, n + 1, firstGen);
  return inColumnSpan(b, coordsInElemBasis);
}

}  // namespace derlie::tests::oracle
