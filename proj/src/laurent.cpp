#include "grovekit/laurent.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>

#include "grovekit/rng.hpp"

namespace grovekit {

namespace {

constexpr uint64_t kMersenne = (uint64_t(1) << 61) - 1;

uint64_t mod_reduce(unsigned __int128 t) {
  uint64_t r = static_cast<uint64_t>(t & kMersenne) +
               static_cast<uint64_t>(t >> 61);
  r = (r & kMersenne) + (r >> 61);
  if (r >= kMersenne) r -= kMersenne;
  return r;
}

uint64_t mulmod(uint64_t a, uint64_t b) {
  return mod_reduce(static_cast<unsigned __int128>(a) * b);
}

uint64_t addmod(uint64_t a, uint64_t b) {
  a += b;
  if (a >= kMersenne) a -= kMersenne;
  return a;
}

uint64_t powmod(uint64_t base, uint64_t e) {
  uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = mulmod(r, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kMersenne - 2); }

uint64_t coeff_mod(int64_t c) {
  if (c >= 0) return static_cast<uint64_t>(c) % kMersenne;
  return kMersenne - static_cast<uint64_t>(-c) % kMersenne;
}

// 3^(m*m/4), the number of groves of order m.
size_t grove_count(int m) {
  size_t r = 1;
  for (int64_t e = static_cast<int64_t>(m) * m / 4; e > 0; --e) r *= 3;
  return r;
}

// 2^(m*(m+1)/2), the number of tilings of the order-m Aztec diamond.
size_t tiling_count(int m) {
  return static_cast<size_t>(1) << (m * (m + 1) / 2);
}

}  // namespace

std::string Var::name() const {
  std::ostringstream os;
  switch (kind) {
    case kVertex:
      os << "x[" << a << "," << b << "," << c << "]";
      break;
    case kEdge:
      os << family_name(static_cast<Family>(a)) << "[" << b << "," << c << "]";
      break;
    case kSquare:
      os << "x[" << a << "," << b << ";" << c << "]";
      break;
  }
  return os.str();
}

int VarTable::add(const Var& v) {
  auto it = index_.find(v);
  if (it != index_.end()) return it->second;
  const int idx = static_cast<int>(vars_.size());
  vars_.push_back(v);
  index_.emplace(v, idx);
  return idx;
}

int VarTable::index_of(const Var& v) const {
  auto it = index_.find(v);
  GK_CHECK(it != index_.end(), "unknown variable " + v.name());
  return it->second;
}

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  GK_ARG_CHECK(nvars >= 0, "negative variable count");
}

int LaurentPoly::exponent(size_t t, int var) const {
  GK_ARG_CHECK(t < term_count() && var >= 0 && var < nvars_,
               "term or variable index out of range");
  return static_cast<int>(bytes_[t * nvars_ + var]) - 128;
}

const uint8_t* LaurentPoly::term_bytes(size_t t) const {
  GK_ARG_CHECK(t < term_count(), "term index out of range");
  return bytes_.data() + t * nvars_;
}

void LaurentPoly::append_term(const std::vector<int>& exps, int64_t coeff) {
  GK_ARG_CHECK(static_cast<int>(exps.size()) == nvars_,
               "exponent vector has wrong length");
  std::vector<uint8_t> row(static_cast<size_t>(nvars_));
  for (int v = 0; v < nvars_; ++v) {
    const int biased = exps[static_cast<size_t>(v)] + 128;
    GK_ARG_CHECK(biased >= 0 && biased <= 255, "exponent outside byte range");
    row[static_cast<size_t>(v)] = static_cast<uint8_t>(biased);
  }
  append_term_bytes(row.data(), coeff);
}

void LaurentPoly::append_term_bytes(const uint8_t* bytes, int64_t coeff) {
  GK_ARG_CHECK(coeff != 0, "zero coefficient");
  if (!coeffs_.empty()) {
    const uint8_t* last = bytes_.data() + (coeffs_.size() - 1) * nvars_;
    GK_CHECK(std::memcmp(last, bytes, static_cast<size_t>(nvars_)) > 0,
             "terms must be appended in strictly descending order");
  }
  bytes_.insert(bytes_.end(), bytes, bytes + nvars_);
  coeffs_.push_back(coeff);
}

LaurentPoly LaurentPoly::one(int nvars) {
  LaurentPoly p(nvars);
  p.append_term(std::vector<int>(static_cast<size_t>(nvars), 0), 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(
    int nvars, const std::vector<std::pair<int, int>>& var_exps,
    int64_t coeff) {
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  for (const auto& [v, e] : var_exps) {
    GK_ARG_CHECK(v >= 0 && v < nvars, "variable index out of range");
    exps[static_cast<size_t>(v)] += e;
  }
  LaurentPoly p(nvars);
  p.append_term(exps, coeff);
  return p;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return nvars_ == o.nvars_ && coeffs_ == o.coeffs_ && bytes_ == o.bytes_;
}

size_t LaurentPoly::find_term(const std::vector<int>& exps) const {
  GK_ARG_CHECK(static_cast<int>(exps.size()) == nvars_,
               "exponent vector has wrong length");
  std::vector<uint8_t> key(static_cast<size_t>(nvars_));
  for (int v = 0; v < nvars_; ++v) {
    const int biased = exps[static_cast<size_t>(v)] + 128;
    GK_ARG_CHECK(biased >= 0 && biased <= 255, "exponent outside byte range");
    key[static_cast<size_t>(v)] = static_cast<uint8_t>(biased);
  }
  // Terms are sorted strictly descending; binary-search the boundary.
  size_t lo = 0, hi = term_count();
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    if (std::memcmp(term_bytes(mid), key.data(),
                    static_cast<size_t>(nvars_)) > 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < term_count() &&
      std::memcmp(term_bytes(lo), key.data(), static_cast<size_t>(nvars_)) ==
          0) {
    return lo;
  }
  return npos;
}

uint64_t LaurentPoly::eval_mod(const std::vector<uint64_t>& values) const {
  GK_ARG_CHECK(static_cast<int>(values.size()) == nvars_,
               "value vector has wrong length");
  std::vector<uint64_t> inverses(static_cast<size_t>(nvars_), 0);
  uint64_t total = 0;
  for (size_t t = 0; t < term_count(); ++t) {
    const uint8_t* row = bytes_.data() + t * nvars_;
    uint64_t acc = coeff_mod(coeffs_[t]);
    for (int v = 0; v < nvars_; ++v) {
      int e = static_cast<int>(row[v]) - 128;
      if (e == 0) continue;
      uint64_t base = values[static_cast<size_t>(v)];
      if (e < 0) {
        uint64_t& inv = inverses[static_cast<size_t>(v)];
        if (inv == 0) inv = invmod(base);
        base = inv;
        e = -e;
      }
      acc = mulmod(acc, powmod(base, static_cast<uint64_t>(e)));
    }
    total = addmod(total, acc);
  }
  return total;
}

std::vector<uint64_t> checksum_point(int nvars, uint64_t salt) {
  RandomSource rs(salt);
  std::vector<uint64_t> values(static_cast<size_t>(nvars));
  for (auto& v : values) v = 2 + rs.next() % (kMersenne - 3);
  return values;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  GK_ARG_CHECK(a.nvars() == b.nvars(), "variable universes differ");
  const size_t L = static_cast<size_t>(a.nvars());
  LaurentPoly out(a.nvars());
  size_t i = 0, j = 0;
  while (i < a.term_count() || j < b.term_count()) {
    int cmp;
    if (i == a.term_count()) {
      cmp = -1;
    } else if (j == b.term_count()) {
      cmp = 1;
    } else {
      cmp = std::memcmp(a.term_bytes(i), b.term_bytes(j), L);
    }
    if (cmp > 0) {
      out.append_term_bytes(a.term_bytes(i), a.coeff(i));
      ++i;
    } else if (cmp < 0) {
      out.append_term_bytes(b.term_bytes(j), b.coeff(j));
      ++j;
    } else {
      const int64_t c = a.coeff(i) + b.coeff(j);
      if (c != 0) out.append_term_bytes(a.term_bytes(i), c);
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
  GK_ARG_CHECK(a.nvars() == b.nvars(), "variable universes differ");
  const int L = a.nvars();
  LaurentPoly out(L);
  if (a.term_count() == 0 || b.term_count() == 0) return out;
  const LaurentPoly& outer = a.term_count() <= b.term_count() ? a : b;
  const LaurentPoly& inner = (&outer == &a) ? b : a;

  const size_t ns = outer.term_count();
  std::vector<size_t> pos(ns, 0);
  std::vector<std::vector<uint8_t>> keys(ns,
                                         std::vector<uint8_t>(static_cast<size_t>(L)));
  auto compute_key = [&](size_t s) {
    const uint8_t* ob = outer.term_bytes(s);
    const uint8_t* ib = inner.term_bytes(pos[s]);
    for (int t = 0; t < L; ++t) {
      const int v = static_cast<int>(ob[t]) + static_cast<int>(ib[t]) - 128;
      GK_CHECK(v >= 0 && v <= 255, "product exponent outside byte range");
      keys[s][static_cast<size_t>(t)] = static_cast<uint8_t>(v);
    }
  };
  auto heap_less = [&](size_t x, size_t y) {
    return std::memcmp(keys[x].data(), keys[y].data(),
                       static_cast<size_t>(L)) < 0;
  };
  std::vector<size_t> heap;
  heap.reserve(ns);
  for (size_t s = 0; s < ns; ++s) {
    compute_key(s);
    heap.push_back(s);
  }
  std::make_heap(heap.begin(), heap.end(), heap_less);

  std::vector<uint8_t> kbuf(static_cast<size_t>(L));
  std::vector<size_t> popped;
  while (!heap.empty()) {
    popped.clear();
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    size_t id = heap.back();
    heap.pop_back();
    std::memcpy(kbuf.data(), keys[id].data(), static_cast<size_t>(L));
    popped.push_back(id);
    while (!heap.empty() &&
           std::memcmp(keys[heap.front()].data(), kbuf.data(),
                       static_cast<size_t>(L)) == 0) {
      std::pop_heap(heap.begin(), heap.end(), heap_less);
      popped.push_back(heap.back());
      heap.pop_back();
    }
    __int128 acc = 0;
    for (size_t s : popped) {
      acc += static_cast<__int128>(outer.coeff(s)) * inner.coeff(pos[s]);
    }
    for (size_t s : popped) {
      if (++pos[s] < inner.term_count()) {
        compute_key(s);
        heap.push_back(s);
        std::push_heap(heap.begin(), heap.end(), heap_less);
      }
    }
    if (acc != 0) {
      const int64_t c = static_cast<int64_t>(acc);
      GK_CHECK(static_cast<__int128>(c) == acc,
               "product coefficient overflow");
      out.append_term_bytes(kbuf.data(), c);
    }
  }
  return out;
}

LaurentPoly divide_products(const std::vector<ProductTerm>& products,
                            const LaurentPoly& divisor,
                            size_t expected_terms) {
  GK_ARG_CHECK(!products.empty(), "dividend needs at least one product");
  const int L = divisor.nvars();
  GK_CHECK(divisor.term_count() > 0, "division by the zero polynomial");
  for (const ProductTerm& p : products) {
    GK_ARG_CHECK(p.p1 != nullptr && p.p2 != nullptr, "null product factor");
    GK_ARG_CHECK(p.p1->nvars() == L && p.p2->nvars() == L,
                 "variable universes differ");
    GK_ARG_CHECK(p.shift.empty() || static_cast<int>(p.shift.size()) == L,
                 "shift vector has wrong length");
  }

  struct Prod {
    const LaurentPoly* outer;
    const LaurentPoly* inner;
    std::vector<int> shift;
  };
  std::vector<Prod> prods;
  for (const ProductTerm& p : products) {
    if (p.p1->term_count() == 0 || p.p2->term_count() == 0) continue;
    Prod pr;
    if (p.p1->term_count() <= p.p2->term_count()) {
      pr.outer = p.p1;
      pr.inner = p.p2;
    } else {
      pr.outer = p.p2;
      pr.inner = p.p1;
    }
    pr.shift = p.shift.empty() ? std::vector<int>(static_cast<size_t>(L), 0)
                               : p.shift;
    prods.push_back(std::move(pr));
  }

  LaurentPoly q(L);
  const uint8_t* d0_bytes = divisor.term_bytes(0);
  const int64_t d0_coeff = divisor.coeff(0);

  // Two stream kinds feed one max-heap ordered by current monomial:
  //  - dividend streams: one per term of a product's smaller factor,
  //    walking the bigger factor;
  //  - subtraction streams: one per divisor tail term, walking the growing
  //    quotient; a stream that catches up with the quotient parks until the
  //    next quotient term appears.
  struct Stream {
    uint8_t kind;    // 0 = dividend, 1 = subtraction
    uint32_t group;  // product index / divisor term index
    uint32_t fixed;  // outer term index (dividend streams)
    size_t pos;      // inner position / quotient position
    std::vector<uint8_t> key;
  };
  std::vector<Stream> streams;
  std::vector<uint32_t> heap;
  std::vector<uint32_t> parked;

  auto dividend_key = [&](Stream& s) {
    const Prod& pr = prods[s.group];
    const uint8_t* ob = pr.outer->term_bytes(s.fixed);
    const uint8_t* ib = pr.inner->term_bytes(s.pos);
    for (int t = 0; t < L; ++t) {
      const int v = static_cast<int>(ob[t]) + static_cast<int>(ib[t]) - 128 +
                    pr.shift[static_cast<size_t>(t)];
      GK_CHECK(v >= 0 && v <= 255, "dividend exponent outside byte range");
      s.key[static_cast<size_t>(t)] = static_cast<uint8_t>(v);
    }
  };
  auto subtraction_key = [&](Stream& s) {
    const uint8_t* db = divisor.term_bytes(s.group);
    const uint8_t* qb = q.term_bytes(s.pos);
    for (int t = 0; t < L; ++t) {
      const int v = static_cast<int>(db[t]) + static_cast<int>(qb[t]) - 128;
      GK_CHECK(v >= 0 && v <= 255, "subtraction exponent outside byte range");
      s.key[static_cast<size_t>(t)] = static_cast<uint8_t>(v);
    }
  };
  auto heap_less = [&](uint32_t x, uint32_t y) {
    return std::memcmp(streams[x].key.data(), streams[y].key.data(),
                       static_cast<size_t>(L)) < 0;
  };
  auto heap_push = [&](uint32_t id) {
    heap.push_back(id);
    std::push_heap(heap.begin(), heap.end(), heap_less);
  };
  auto heap_pop = [&]() {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    const uint32_t id = heap.back();
    heap.pop_back();
    return id;
  };

  for (uint32_t pi = 0; pi < prods.size(); ++pi) {
    for (size_t i = 0; i < prods[pi].outer->term_count(); ++i) {
      streams.push_back(Stream{0, pi, static_cast<uint32_t>(i), 0,
                               std::vector<uint8_t>(static_cast<size_t>(L))});
      dividend_key(streams.back());
    }
  }
  for (size_t l = 1; l < divisor.term_count(); ++l) {
    streams.push_back(Stream{1, static_cast<uint32_t>(l), 0, 0,
                             std::vector<uint8_t>(static_cast<size_t>(L))});
    parked.push_back(static_cast<uint32_t>(streams.size() - 1));
  }
  heap.reserve(streams.size());
  for (uint32_t id = 0; id < streams.size(); ++id) {
    if (streams[id].kind == 0) heap.push_back(id);
  }
  std::make_heap(heap.begin(), heap.end(), heap_less);

  std::vector<uint8_t> kbuf(static_cast<size_t>(L));
  std::vector<uint8_t> qbuf(static_cast<size_t>(L));
  std::vector<uint32_t> popped;
  while (!heap.empty()) {
    popped.clear();
    uint32_t id0 = heap_pop();
    std::memcpy(kbuf.data(), streams[id0].key.data(),
                static_cast<size_t>(L));
    popped.push_back(id0);
    while (!heap.empty() &&
           std::memcmp(streams[heap.front()].key.data(), kbuf.data(),
                       static_cast<size_t>(L)) == 0) {
      popped.push_back(heap_pop());
    }
    __int128 acc = 0;
    for (uint32_t id : popped) {
      const Stream& s = streams[id];
      if (s.kind == 0) {
        const Prod& pr = prods[s.group];
        acc += static_cast<__int128>(pr.outer->coeff(s.fixed)) *
               pr.inner->coeff(s.pos);
      } else {
        acc -= static_cast<__int128>(divisor.coeff(s.group)) * q.coeff(s.pos);
      }
    }
    for (uint32_t id : popped) {
      Stream& s = streams[id];
      ++s.pos;
      if (s.kind == 0) {
        if (s.pos < prods[s.group].inner->term_count()) {
          dividend_key(s);
          heap_push(id);
        }
      } else {
        if (s.pos < q.term_count()) {
          subtraction_key(s);
          heap_push(id);
        } else {
          parked.push_back(id);
        }
      }
    }
    if (acc != 0) {
      GK_CHECK(acc % d0_coeff == 0, "inexact polynomial division");
      const __int128 qc128 = acc / d0_coeff;
      const int64_t qc = static_cast<int64_t>(qc128);
      GK_CHECK(static_cast<__int128>(qc) == qc128,
               "quotient coefficient overflow");
      for (int t = 0; t < L; ++t) {
        const int v =
            static_cast<int>(kbuf[static_cast<size_t>(t)]) -
            static_cast<int>(d0_bytes[t]) + 128;
        GK_CHECK(v >= 0 && v <= 255, "quotient exponent outside byte range");
        qbuf[static_cast<size_t>(t)] = static_cast<uint8_t>(v);
      }
      GK_CHECK(q.term_count() < expected_terms,
               "quotient exceeds its expected term count");
      q.append_term_bytes(qbuf.data(), qc);
      for (uint32_t id : parked) {
        Stream& s = streams[id];
        s.pos = q.term_count() - 1;
        subtraction_key(s);
        heap_push(id);
      }
      parked.clear();
    }
  }
  GK_CHECK(q.term_count() == expected_terms,
           "quotient term count differs from the expected count");

  // Exactness checksum: dividend == divisor * quotient at two deterministic
  // evaluation points modulo 2^61 - 1.
  for (const uint64_t salt : {uint64_t{0xC0FFEE}, uint64_t{0xBADC0DE}}) {
    const std::vector<uint64_t> pt =
        checksum_point(L, salt);
    uint64_t lhs = 0;
    for (const Prod& pr : prods) {
      uint64_t u = mulmod(pr.outer->eval_mod(pt), pr.inner->eval_mod(pt));
      for (int t = 0; t < L; ++t) {
        const int e = pr.shift[static_cast<size_t>(t)];
        if (e == 0) continue;
        const uint64_t base = e > 0 ? pt[static_cast<size_t>(t)]
                                    : invmod(pt[static_cast<size_t>(t)]);
        u = mulmod(u, powmod(base, static_cast<uint64_t>(e > 0 ? e : -e)));
      }
      lhs = addmod(lhs, u);
    }
    const uint64_t rhs = mulmod(divisor.eval_mod(pt), q.eval_mod(pt));
    GK_CHECK(lhs == rhs, "division checksum mismatch");
  }
  return q;
}

namespace {

// Shared driver for the two triangular-lattice expansions.  `initial`
// produces the polynomial of an initial cell; `attach` returns the three
// per-branch shift vectors (empty when nothing is attached).
LaurentExpansion run_cube_recurrence(
    int n, VarTable vars,
    const std::function<LaurentPoly(const VarTable&, int, int, int)>& initial,
    const std::function<std::array<std::vector<int>, 3>(const VarTable&, int,
                                                        int, int)>& attach) {
  LaurentExpansion ex;
  ex.vars = std::move(vars);

  std::map<std::array<int, 3>, LaurentPoly> store;
  auto value = [&](int i, int j, int k) -> const LaurentPoly& {
    const std::array<int, 3> cell{i, j, k};
    auto it = store.find(cell);
    if (it != store.end()) return it->second;
    const int s = i + j + k;
    GK_CHECK(s >= -n - 1 && s <= -n + 1 && i <= 0 && j <= 0 && k <= 0,
             "recurrence reference outside the initial layers");
    return store.emplace(cell, initial(ex.vars, i, j, k)).first->second;
  };

  for (int s = -n + 2; s <= 0; ++s) {
    for (int i = s; i <= 0; ++i) {
      for (int j = s - i; j <= 0; ++j) {
        const int k = s - i - j;
        const auto shifts = attach(ex.vars, i, j, k);
        std::vector<ProductTerm> prods;
        prods.push_back({&value(i - 1, j, k), &value(i, j - 1, k - 1),
                         shifts[0]});
        prods.push_back({&value(i, j - 1, k), &value(i - 1, j, k - 1),
                         shifts[1]});
        prods.push_back({&value(i, j, k - 1), &value(i - 1, j - 1, k),
                         shifts[2]});
        const LaurentPoly& div = value(i - 1, j - 1, k - 1);
        LaurentPoly f = divide_products(prods, div, grove_count(n + s));
        store.emplace(std::array<int, 3>{i, j, k}, std::move(f));
      }
    }
    // Levels below s - 2 are no longer referenced.
    for (auto it = store.begin(); it != store.end();) {
      if (it->first[0] + it->first[1] + it->first[2] < s - 2) {
        it = store.erase(it);
      } else {
        ++it;
      }
    }
  }
  ex.poly = value(0, 0, 0);
  return ex;
}

}  // namespace

LaurentExpansion cube_poly_vertex(int n) {
  GK_ARG_CHECK(n >= 1, "order must be positive");
  enforce_cost_guard(n <= 5, "vertex expansion is limited to order 5");
  VarTable vars;
  for (int s = -n - 1; s <= -n + 1; ++s) {
    for (int i = s; i <= 0; ++i) {
      for (int j = s - i; j <= 0; ++j) {
        vars.add(Var::vertex(Vertex{i, j, s - i - j}));
      }
    }
  }
  auto initial = [](const VarTable& vt, int i, int j, int k) {
    return LaurentPoly::monomial(
        vt.size(), {{vt.index_of(Var::vertex(Vertex{i, j, k})), 1}});
  };
  auto attach = [](const VarTable&, int, int, int) {
    return std::array<std::vector<int>, 3>{};
  };
  return run_cube_recurrence(n, std::move(vars), initial, attach);
}

LaurentExpansion cube_poly_edges(int n, bool with_faces) {
  GK_ARG_CHECK(n >= 1, "order must be positive");
  enforce_cost_guard(n <= (with_faces ? 6 : 7),
                     "edge expansion is limited to order 7 "
                     "(order 6 with face variables)");
  VarTable vars;
  for (int fam = 0; fam < 3; ++fam) {
    for (int u = 0; u <= n - 1; ++u) {
      for (int v = 0; u + v <= n - 1; ++v) {
        vars.add(Var{Var::kEdge, fam, u, v});
      }
    }
  }
  if (with_faces) {
    for (int p = 0; p <= n - 1; ++p) {
      for (int q = 0; p + q <= n - 1; ++q) {
        vars.add(Var::vertex(Vertex{-p, -q, -(n - 1 - p - q)}));
      }
    }
  }
  auto initial = [n, with_faces](const VarTable& vt, int i, int j, int k) {
    if (with_faces && i + j + k == -n + 1) {
      return LaurentPoly::monomial(
          vt.size(), {{vt.index_of(Var::vertex(Vertex{i, j, k})), 1}});
    }
    return LaurentPoly::one(vt.size());
  };
  auto attach = [](const VarTable& vt, int i, int j, int k) {
    const int va = vt.index_of(Var{Var::kEdge, 0, -i, -j});
    const int vb = vt.index_of(Var{Var::kEdge, 1, -k, -i});
    const int vc = vt.index_of(Var{Var::kEdge, 2, -k, -j});
    std::array<std::vector<int>, 3> shifts;
    for (auto& s : shifts) s.assign(static_cast<size_t>(vt.size()), 0);
    shifts[0][static_cast<size_t>(va)] = 1;  // first branch creates {a, b}
    shifts[0][static_cast<size_t>(vb)] = 1;
    shifts[1][static_cast<size_t>(va)] = 1;  // second branch creates {a, c}
    shifts[1][static_cast<size_t>(vc)] = 1;
    shifts[2][static_cast<size_t>(vb)] = 1;  // third branch creates {b, c}
    shifts[2][static_cast<size_t>(vc)] = 1;
    return shifts;
  };
  return run_cube_recurrence(n, std::move(vars), initial, attach);
}

Grove decode_grove(const LaurentExpansion& exp, size_t term, int n) {
  GK_ARG_CHECK(term < exp.poly.term_count(), "term index out of range");
  Grove g(n);
  for (int v = 0; v < exp.vars.size(); ++v) {
    const Var& var = exp.vars.at(v);
    if (var.kind != Var::kEdge) continue;
    const int e = exp.poly.exponent(term, v);
    GK_CHECK(e == 0 || e == 1, "edge exponent must be 0 or 1");
    if (e == 1) g.add(Label{static_cast<Family>(var.a), var.b, var.c});
  }
  return g;
}

OracleGroveStats oracle_grove_stats(int n) {
  GK_ARG_CHECK(n >= 1, "order must be positive");
  enforce_cost_guard(n <= 6, "exhaustive grove statistics are limited to order 6");
  const LaurentExpansion ex = cube_poly_edges(n, false);
  OracleGroveStats st;
  st.order = n;
  st.total = BigInt(ex.poly.term_count());
  const size_t nt = static_cast<size_t>(triangle_count(n));
  for (auto* vec : {&st.cnt_a, &st.cnt_b, &st.cnt_c, &st.cnt_ab, &st.cnt_ac,
                    &st.cnt_bc, &st.cnt_abc, &st.cnt_empty}) {
    vec->assign(nt, BigInt(0));
  }

  struct TriVars {
    int a, b, c;
    size_t idx;
  };
  std::vector<TriVars> tv;
  for (const Triangle& t : downward_triangles(n)) {
    const TriangleSlots s = triangle_slots(n, t);
    tv.push_back({ex.vars.index_of(Var::edge(s.a)),
                  ex.vars.index_of(Var::edge(s.b)),
                  ex.vars.index_of(Var::edge(s.c)),
                  static_cast<size_t>(pair_index(t.p, t.q))});
  }
  for (size_t term = 0; term < ex.poly.term_count(); ++term) {
    const uint8_t* row = ex.poly.term_bytes(term);
    for (const TriVars& t : tv) {
      const bool a = row[t.a] != 128;
      const bool b = row[t.b] != 128;
      const bool c = row[t.c] != 128;
      if (a) ++st.cnt_a[t.idx];
      if (b) ++st.cnt_b[t.idx];
      if (c) ++st.cnt_c[t.idx];
      if (a && b && !c) ++st.cnt_ab[t.idx];
      if (a && !b && c) ++st.cnt_ac[t.idx];
      if (!a && b && c) ++st.cnt_bc[t.idx];
      if (a && b && c) ++st.cnt_abc[t.idx];
      if (!a && !b && !c) ++st.cnt_empty[t.idx];
    }
  }
  return st;
}

namespace {
Rat count_ratio(const std::vector<BigInt>& cnt, const Triangle& t,
                const BigInt& total) {
  return Rat(cnt.at(static_cast<size_t>(pair_index(t.p, t.q))), total);
}
}  // namespace

Rat OracleGroveStats::prob_a(const Triangle& t) const {
  return count_ratio(cnt_a, t, total);
}
Rat OracleGroveStats::prob_b(const Triangle& t) const {
  return count_ratio(cnt_b, t, total);
}
Rat OracleGroveStats::prob_c(const Triangle& t) const {
  return count_ratio(cnt_c, t, total);
}
Rat OracleGroveStats::prob_empty(const Triangle& t) const {
  return count_ratio(cnt_empty, t, total);
}
Rat OracleGroveStats::pair_ab(const Triangle& t) const {
  return count_ratio(cnt_ab, t, total);
}
Rat OracleGroveStats::pair_ac(const Triangle& t) const {
  return count_ratio(cnt_ac, t, total);
}
Rat OracleGroveStats::pair_bc(const Triangle& t) const {
  return count_ratio(cnt_bc, t, total);
}

LaurentExpansion octahedron_poly(int n) {
  GK_ARG_CHECK(n >= 1, "order must be positive");
  enforce_cost_guard(n <= 4, "Aztec face expansion is limited to order 4");
  LaurentExpansion ex;
  for (int i = -n; i <= n; ++i) {
    const int r = n - std::abs(i);
    for (int j = -r; j <= r; ++j) ex.vars.add(Var::square(i, j, 0));
  }
  for (int i = -(n - 1); i <= n - 1; ++i) {
    const int r = n - 1 - std::abs(i);
    for (int j = -r; j <= r; ++j) ex.vars.add(Var::square(i, j, -1));
  }
  const int L = ex.vars.size();

  std::map<std::array<int, 3>, LaurentPoly> store;
  auto value = [&](int i, int j, int m) -> const LaurentPoly& {
    const std::array<int, 3> cell{i, j, m};
    auto it = store.find(cell);
    if (it != store.end()) return it->second;
    GK_CHECK(m == 0 || m == -1, "recurrence reference outside initial layers");
    return store
        .emplace(cell, LaurentPoly::monomial(
                           L, {{ex.vars.index_of(Var::square(i, j, m)), 1}}))
        .first->second;
  };
  for (int m = 1; m <= n; ++m) {
    for (int i = -(n - m); i <= n - m; ++i) {
      const int r = n - m - std::abs(i);
      for (int j = -r; j <= r; ++j) {
        std::vector<ProductTerm> prods;
        prods.push_back({&value(i - 1, j, m - 1), &value(i + 1, j, m - 1), {}});
        prods.push_back({&value(i, j - 1, m - 1), &value(i, j + 1, m - 1), {}});
        const LaurentPoly& div = value(i, j, m - 2);
        LaurentPoly g = divide_products(prods, div, tiling_count(m));
        store.emplace(std::array<int, 3>{i, j, m}, std::move(g));
      }
    }
    for (auto it = store.begin(); it != store.end();) {
      if (it->first[2] < m - 1) {
        it = store.erase(it);
      } else {
        ++it;
      }
    }
  }
  ex.poly = value(0, 0, n);
  return ex;
}

}  // namespace grovekit
