#include "splitfox/reps.hpp"

#include <algorithm>
#include <cstdint>

#include "splitfox/errors.hpp"

namespace splitfox {

FieldMatrix::FieldMatrix(ExactField field, std::size_t n)
    : field_(std::move(field)), n_(n), data_(n * n, field_.zero()) {}

FieldMatrix FieldMatrix::identity(const ExactField& f, std::size_t n) {
  FieldMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  if (n_ != rhs.n_ || !(field_ == rhs.field_)) throw domain_error("matrix product mismatch");
  FieldMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (field_.is_zero(at(i, k))) continue;
      for (std::size_t j = 0; j < n_; ++j)
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(at(i, k), rhs.at(k, j)));
    }
  return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& rhs) const {
  if (n_ != rhs.n_ || !(field_ == rhs.field_)) throw domain_error("matrix sum mismatch");
  FieldMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

FieldMatrix FieldMatrix::scaled(const ExactField::Elem& c) const {
  FieldMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) out.data_[i] = field_.mul(data_[i], c);
  return out;
}

std::optional<FieldMatrix> FieldMatrix::inverse() const {
  // Gauss-Jordan over the exact field
  FieldMatrix a = *this;
  FieldMatrix inv = identity(field_, n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && field_.is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == n_) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    ExactField::Elem d = field_.inv(a.at(col, col));
    for (std::size_t j = 0; j < n_; ++j) {
      a.at(col, j) = field_.mul(a.at(col, j), d);
      inv.at(col, j) = field_.mul(inv.at(col, j), d);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == col || field_.is_zero(a.at(i, col))) continue;
      ExactField::Elem f = a.at(i, col);
      for (std::size_t j = 0; j < n_; ++j) {
        a.at(i, j) = field_.sub(a.at(i, j), field_.mul(f, a.at(col, j)));
        inv.at(i, j) = field_.sub(inv.at(i, j), field_.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

bool FieldMatrix::is_identity() const { return *this == identity(field_, n_); }

FieldMatrix Representation::eval(const Word& w) const {
  FieldMatrix out = FieldMatrix::identity(field, dimension);
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw domain_error("representation undefined on generator: " + l.gen);
    if (l.sign > 0) {
      out = out * it->second;
    } else {
      auto inv = it->second.inverse();
      if (!inv) throw domain_error("representation image is singular for: " + l.gen);
      out = out * *inv;
    }
  }
  return out;
}

bool verify(const Representation& r, const Presentation& p) {
  for (const auto& g : p.generators()) {
    auto it = r.images.find(g);
    if (it == r.images.end()) return false;
    if (it->second.dim() != r.dimension) return false;
    if (!it->second.inverse()) return false;
  }
  for (const Word& rel : p.relators())
    if (!r.eval(rel).is_identity()) return false;
  return true;
}

Representation trivial_rep(const Presentation& p, const ExactField& f) {
  Representation r;
  r.dimension = 1;
  r.field = f;
  for (const auto& g : p.generators()) r.images.emplace(g, FieldMatrix::identity(f, 1));
  return r;
}

PolyMatrix tensor_eval(const Representation& r, const Epimorphism& eps,
                       const GroupRingElement& x) {
  const ExactField& f = r.field;
  PolyMatrix out(f, r.dimension, r.dimension);
  for (const auto& [w, c] : x.terms()) {
    FieldMatrix m = r.eval(w);
    long e = static_cast<long>(eps.eval(w));
    ExactField::Elem coeff = f.from_int(c);
    for (std::size_t i = 0; i < r.dimension; ++i)
      for (std::size_t j = 0; j < r.dimension; ++j) {
        if (f.is_zero(m.at(i, j))) continue;
        out.at(i, j) =
            out.at(i, j) + LaurentPoly::monomial(f, e, f.mul(coeff, m.at(i, j)));
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force search over GL(d, F_p)^k.
//
// Flat fixed-size matrices over small residues keep the inner loop cheap; the
// DFS checks each relator at the first depth where all its generators are
// assigned, with the products between occurrences of that deepest generator
// precomputed per prefix.

namespace {

constexpr std::size_t kMaxDim = 4;

struct ModMat {
  std::uint32_t e[kMaxDim * kMaxDim];
};

ModMat mod_identity(std::size_t d) {
  ModMat m{};
  for (std::size_t i = 0; i < d; ++i) m.e[i * d + i] = 1;
  return m;
}

ModMat mod_mul(const ModMat& a, const ModMat& b, std::size_t d, std::uint32_t p) {
  ModMat out{};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      std::uint32_t aik = a.e[i * d + k];
      if (!aik) continue;
      for (std::size_t j = 0; j < d; ++j)
        out.e[i * d + j] = (out.e[i * d + j] + aik * b.e[k * d + j]) % p;
    }
  return out;
}

bool mod_equal(const ModMat& a, const ModMat& b, std::size_t d) {
  for (std::size_t i = 0; i < d * d; ++i)
    if (a.e[i] != b.e[i]) return false;
  return true;
}

// all invertible matrices in lexicographic row-major order, with inverses
void enumerate_gl(std::size_t d, std::uint32_t p, std::vector<ModMat>& gl,
                  std::vector<ModMat>& gl_inv) {
  std::size_t cells = d * d;
  std::vector<std::uint32_t> entries(cells, 0);
  auto invert = [&](const ModMat& m) -> std::optional<ModMat> {
    // Gauss-Jordan mod p on a small copy
    std::uint32_t a[kMaxDim][2 * kMaxDim] = {};
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a[i][j] = m.e[i * d + j];
      a[i][d + i] = 1;
    }
    auto inv_mod = [&](std::uint32_t x) {
      std::uint32_t r = 1, b = x, e = p - 2;  // Fermat; p prime
      while (e) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
      }
      return r;
    };
    for (std::size_t col = 0; col < d; ++col) {
      std::size_t piv = col;
      while (piv < d && a[piv][col] == 0) ++piv;
      if (piv == d) return std::nullopt;
      if (piv != col)
        for (std::size_t j = 0; j < 2 * d; ++j) std::swap(a[piv][j], a[col][j]);
      std::uint32_t di = inv_mod(a[col][col]);
      for (std::size_t j = 0; j < 2 * d; ++j) a[col][j] = (a[col][j] * di) % p;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == col || a[i][col] == 0) continue;
        std::uint32_t f = a[i][col];
        for (std::size_t j = 0; j < 2 * d; ++j)
          a[i][j] = (a[i][j] + (p - f) * a[col][j]) % p;
      }
    }
    ModMat out{};
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out.e[i * d + j] = a[i][d + j];
    return out;
  };

  bool done = false;
  while (!done) {
    ModMat m{};
    for (std::size_t i = 0; i < cells; ++i) m.e[i] = entries[i];
    if (auto inv = invert(m)) {
      gl.push_back(m);
      gl_inv.push_back(*inv);
    }
    // increment the row-major odometer
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++entries[i] < p) break;
      entries[i] = 0;
      if (i == 0) done = true;
    }
  }
}

struct CompiledRelator {
  std::vector<std::pair<int, int>> letters;  // (generator index, sign)
  int check_depth = -1;                      // max generator index, -1 if empty
  // letters split around occurrences of the depth generator:
  // value = product(segments[0]) * D^sign[0] * product(segments[1]) * ...
  std::vector<std::vector<std::pair<int, int>>> segments;
  std::vector<int> depth_signs;
  std::vector<ModMat> segment_cache;  // refreshed per DFS prefix
};

}  // namespace

std::vector<Representation> search_homs(const Presentation& p, std::size_t dim, long long mod,
                                        std::optional<std::size_t> limit,
                                        unsigned long long budget) {
  if (dim == 0 || dim > kMaxDim)
    throw domain_error("search_homs: dimension must be between 1 and " +
                       std::to_string(kMaxDim));
  ExactField field = ExactField::prime(mod);  // validates primality
  if (mod > 1000) throw domain_error("search_homs: modulus too large for enumeration");
  if (limit && *limit == 0) return {};
  auto pp = static_cast<std::uint32_t>(mod);
  std::size_t k = p.num_generators();
  if (k == 0) throw domain_error("search_homs: presentation has no generators");

  std::vector<ModMat> gl, gl_inv;
  enumerate_gl(dim, pp, gl, gl_inv);

  if (!limit) {
    // |GL|^k must stay within budget when the caller wants the full list
    unsigned long long total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (total > budget / gl.size()) {
        overflow = true;
        break;
      }
      total *= gl.size();
    }
    if (overflow || total > budget)
      throw domain_error("search_homs: candidate space exceeds budget; pass a limit");
  }

  // compile relators; schedule each at the depth of its deepest generator
  std::vector<CompiledRelator> relators;
  for (const Word& r : p.relators()) {
    CompiledRelator cr;
    for (const Letter& l : r.letters())
      cr.letters.emplace_back(static_cast<int>(*p.generator_index(l.gen)), l.sign);
    for (const auto& [gi, sign] : cr.letters) {
      (void)sign;
      cr.check_depth = std::max(cr.check_depth, gi);
    }
    if (cr.check_depth >= 0) {
      cr.segments.emplace_back();
      for (const auto& [gi, sign] : cr.letters) {
        if (gi == cr.check_depth) {
          cr.depth_signs.push_back(sign);
          cr.segments.emplace_back();
        } else {
          cr.segments.back().emplace_back(gi, sign);
        }
      }
      cr.segment_cache.resize(cr.segments.size());
    }
    relators.push_back(std::move(cr));
  }
  // identity relators (padding) hold for every assignment
  std::vector<std::vector<CompiledRelator*>> at_depth(k);
  for (CompiledRelator& cr : relators)
    if (cr.check_depth >= 0) at_depth[cr.check_depth].push_back(&cr);

  std::vector<std::size_t> assign(k, 0);
  std::vector<Representation> found;
  ModMat ident = mod_identity(dim);

  auto eval_segment = [&](const std::vector<std::pair<int, int>>& seg) {
    ModMat m = ident;
    for (const auto& [gi, sign] : seg)
      m = mod_mul(m, sign > 0 ? gl[assign[gi]] : gl_inv[assign[gi]], dim, pp);
    return m;
  };

  auto record = [&]() {
    Representation r;
    r.dimension = dim;
    r.field = field;
    for (std::size_t g = 0; g < k; ++g) {
      FieldMatrix fm(field, dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          fm.at(i, j) = field.from_int(Int(gl[assign[g]].e[i * dim + j]));
      r.images.emplace(p.generators()[g], std::move(fm));
    }
    found.push_back(std::move(r));
  };

  // DFS in generator order; candidate order is the GL enumeration order, so
  // results come out in lexicographic order of matrix encodings.
  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == k) {
      record();
      return limit && found.size() >= *limit;
    }
    // segments of relators checked here depend only on shallower generators
    for (CompiledRelator* cr : at_depth[depth])
      for (std::size_t s = 0; s < cr->segments.size(); ++s)
        cr->segment_cache[s] = eval_segment(cr->segments[s]);
    for (std::size_t cand = 0; cand < gl.size(); ++cand) {
      assign[depth] = cand;
      bool ok = true;
      for (CompiledRelator* cr : at_depth[depth]) {
        ModMat m = cr->segment_cache[0];
        for (std::size_t s = 0; s < cr->depth_signs.size(); ++s) {
          m = mod_mul(m, cr->depth_signs[s] > 0 ? gl[cand] : gl_inv[cand], dim, pp);
          m = mod_mul(m, cr->segment_cache[s + 1], dim, pp);
        }
        if (!mod_equal(m, ident, dim)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, depth + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace splitfox
