#include "lcm/suites.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <random>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "lcm/constructible.hpp"
#include "lcm/expr.hpp"
#include "lcm/isg.hpp"
#include "lcm/nekrashevych.hpp"
#include "lcm/operator_model.hpp"
#include "lcm/shift_groupoid.hpp"
#include "lcm/spectra.hpp"

namespace lcm {

namespace {

template <class M>
struct is_zappa_szep : std::false_type {};
template <class B>
struct is_zappa_szep<ZappaSzep<B>> : std::true_type {};
template <class M>
inline constexpr bool is_zs = is_zappa_szep<M>::value;

using Failure = std::optional<std::string>;

class Ctx {
 public:
  Ctx(std::string suite, SuiteParams const& p, CheckReport& rep)
      : params(p), _suite(std::move(suite)), _rep(rep) {}

  template <class Body>
  void prop(std::string name, std::size_t n, Body&& body) {
    _rep.properties.push_back(
        {_suite, std::move(name), sweep(params.exec, n, std::forward<Body>(body))});
  }

  void add(std::string name, SweepResult r) {
    _rep.properties.push_back({_suite, std::move(name), std::move(r)});
  }

  void note(std::string const& text) { _rep.notes.push_back(_suite + ": " + text); }

  SuiteParams const& params;

 private:
  std::string _suite;
  CheckReport& _rep;
};

// Index tuples of {0..n-1}^k, exhaustive below the cap and a seeded sample
// above it.
class TupleSpace {
 public:
  TupleSpace(std::size_t n, std::size_t k, std::size_t cap, std::uint64_t seed)
      : _n(n), _k(k) {
    std::size_t total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (n != 0 && total > cap / n) {
        overflow = true;
      }
      total *= n;
    }
    if (!overflow && total <= cap) {
      _size = total;
      return;
    }
    _sampled = true;
    _size = cap;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    _sample.resize(cap);
    for (auto& t : _sample) {
      for (std::size_t i = 0; i < k; ++i) {
        t[i] = pick(rng);
      }
    }
  }

  std::size_t size() const { return _size; }
  bool sampled() const { return _sampled; }

  std::array<std::size_t, 3> operator[](std::size_t i) const {
    if (_sampled) {
      return _sample[i];
    }
    std::array<std::size_t, 3> t{0, 0, 0};
    for (std::size_t j = 0; j < _k; ++j) {
      t[_k - 1 - j] = i % _n;
      i /= _n;
    }
    return t;
  }

 private:
  std::size_t _n;
  std::size_t _k;
  std::size_t _size = 0;
  bool _sampled = false;
  std::vector<std::array<std::size_t, 3>> _sample;
};

template <LcmMonoid M>
std::vector<Triple<element_t<M>>> triples_with_zero(InverseSemigroup<M> const& isg,
                                                    std::size_t depth) {
  auto ts = isg.enumerate(depth);
  ts.insert(ts.begin(), Triple<element_t<M>>::zero());
  return ts;
}

// ---------------------------------------------------------------- lcm

template <LcmMonoid M>
void lcm_suite(Ctx& c, M const& m, bool certified) {
  auto const elems = m.enumerate_up_to(c.params.depth);
  std::size_t const n = elems.size();
  auto show = [&](auto const& p, auto const& q) {
    return m.to_string(p) + ", " + m.to_string(q);
  };

  for (Side side : {Side::left, Side::right}) {
    // right LCM: z ∈ pP ∩ qP iff z ∈ rP (divisions with the known factor on the left)
    Side const div = side == Side::right ? Side::left : Side::right;
    std::string const name = side == Side::right ? "right_lcm" : "left_lcm";
    c.prop(name, n * n, [&, side, div](std::size_t i) -> Failure {
      auto const& p = elems[i / n];
      auto const& q = elems[i % n];
      auto w = side == Side::right ? m.right_lcm(p, q) : m.left_lcm(p, q);
      if (w) {
        bool const ok = side == Side::right
                            ? m.mul(p, w->w1) == w->r && m.mul(q, w->w2) == w->r
                            : m.mul(w->w1, p) == w->r && m.mul(w->w2, q) == w->r;
        if (!ok) {
          return show(p, q) + ": witnesses do not multiply to the LCM";
        }
      }
      // a failed bounded division proves nothing, so minimality needs exact answers
      if (!certified) {
        return std::nullopt;
      }
      for (auto const& z : elems) {
        bool const common = m.divide(div, p, z).has_value() && m.divide(div, q, z).has_value();
        bool const via = w && m.divide(div, w->r, z).has_value();
        if (common != via) {
          return show(p, q) + ": common multiple " + m.to_string(z)
                 + (via ? " not expected" : " outside the LCM ideal");
        }
      }
      return std::nullopt;
    });
  }

  c.prop("division", n * n, [&](std::size_t i) -> Failure {
    auto const& p = elems[i / n];
    auto const& x = elems[i % n];
    auto const px = m.mul(p, x);
    auto a = m.divide(Side::left, p, px);
    auto b = m.divide(Side::right, x, px);
    if (!a || !(*a == x) || !b || !(*b == p)) {
      return show(p, x);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- instances

template <LcmMonoid M>
void instances_suite(Ctx& c, M const& m, bool certified) {
  auto const elems = m.enumerate_up_to(c.params.depth);
  std::size_t const n = elems.size();
  TupleSpace t3(n, 3, c.params.sample_cap, c.params.seed);
  if (t3.sampled()) {
    c.note("monoid_associativity sampled " + std::to_string(t3.size()) + " triples");
  }
  c.prop("monoid_associativity", t3.size(), [&](std::size_t i) -> Failure {
    auto [a, b, d] = t3[i];
    if (!(m.mul(m.mul(elems[a], elems[b]), elems[d])
          == m.mul(elems[a], m.mul(elems[b], elems[d])))) {
      return m.to_string(elems[a]) + ", " + m.to_string(elems[b]) + ", "
             + m.to_string(elems[d]);
    }
    return std::nullopt;
  });
  c.prop("identity", n, [&](std::size_t i) -> Failure {
    auto const& x = elems[i];
    if (!(m.mul(m.identity(), x) == x) || !(m.mul(x, m.identity()) == x)) {
      return m.to_string(x);
    }
    return std::nullopt;
  });

  if constexpr (is_zs<M>) {
    auto const& b = m.backend();
    auto const group = b.enumerate_group();
    auto const words = words_up_to(b.alphabet(), c.params.depth);
    c.prop("pseudo_free", group.size(), [&](std::size_t i) -> Failure {
      auto const& g = group[i];
      for (auto const& w : words) {
        auto [moved, restricted] = b.act_restrict(g, w);
        if (moved == w && b.is_group_identity(restricted) && !b.is_group_identity(g)) {
          return b.group_to_string(g) + " fixes " + to_string(w) + " trivially";
        }
      }
      return std::nullopt;
    });

    std::vector<std::pair<Word, Word>> same_length;
    for (auto const& a : words) {
      for (auto const& d : words) {
        if (a.size() == d.size()) {
          same_length.emplace_back(a, d);
        }
      }
    }
    std::size_t const gs = group.size();
    std::vector<char> inconclusive(same_length.size() * gs, 0);
    c.prop("recurrence", same_length.size() * gs, [&](std::size_t i) -> Failure {
      auto const& [a, d] = same_length[i / gs];
      auto const& k = group[i % gs];
      auto j = b.transport(a, d, k);
      if (!j) {
        if (certified) {
          return "no transport " + to_string(a) + " -> " + to_string(d);
        }
        inconclusive[i] = 1;
        return std::nullopt;
      }
      auto [moved, restricted] = b.act_restrict(*j, a);
      if (!(moved == d) || !(restricted == k)) {
        return "bad transport " + to_string(a) + " -> " + to_string(d) + " with "
               + b.group_to_string(k);
      }
      return std::nullopt;
    });
    auto const missing = std::count(inconclusive.begin(), inconclusive.end(), 1);
    if (missing > 0) {
      c.note(std::to_string(missing) + " transport searches were inconclusive");
    }

    c.prop("left_ideals_linear", n * n, [&](std::size_t i) -> Failure {
      auto const& x = elems[i / n];
      auto const& y = elems[i % n];
      auto w = m.left_lcm(x, y);
      if (!w) {
        return certified ? std::optional<std::string>(m.to_string(x) + ", " + m.to_string(y)
                                                      + ": no left LCM")
                         : std::nullopt;
      }
      if (!unit_solve(m, Side::left, w->r, x) && !unit_solve(m, Side::left, w->r, y)) {
        return m.to_string(x) + ", " + m.to_string(y) + ": LCM is neither argument";
      }
      return std::nullopt;
    });
  }
}

// ---------------------------------------------------------------- isg

void odometer_equality(Ctx& c, OdometerMonoid const& m) {
  InverseSemigroup<OdometerMonoid> isg(m);
  std::int64_t const e = m.backend().group_bound();
  using E = ZsElement<OdometerElement>;
  std::vector<Triple<E>> raw;
  auto const elems = m.enumerate_up_to(std::min<std::size_t>(c.params.depth, 1));
  for (auto const& p : elems) {
    for (auto const& q : elems) {
      for (auto const& r : elems) {
        if (auto t = isg.try_make(p, q, r)) {
          raw.push_back(*t);
        }
      }
    }
  }
  // pairs of equal slot lengths, plus a sample across lengths
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (std::size_t b = 0; b < raw.size(); ++b) {
      if (raw[a].p().word.size() == raw[b].p().word.size()
          && raw[a].q().word.size() == raw[b].q().word.size()
          && raw[a].r().word.size() == raw[b].r().word.size()) {
        pairs.emplace_back(a, b);
      }
    }
  }
  std::mt19937_64 rng(c.params.seed);
  std::size_t const cap = 20000;
  if (pairs.size() > cap) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(cap);
    std::sort(pairs.begin(), pairs.end());
  }
  std::uniform_int_distribution<std::size_t> pick(0, raw.empty() ? 0 : raw.size() - 1);
  for (std::size_t k = 0; k < cap / 10 && !raw.empty(); ++k) {
    pairs.emplace_back(pick(rng), pick(rng));
  }
  auto unit = [&](std::int64_t x) { return m.unit(OdometerElement{x}); };
  c.prop("equality_units", pairs.size(), [&](std::size_t i) -> Failure {
    auto const& s = raw[pairs[i].first];
    auto const& t = raw[pairs[i].second];
    bool brute = false;
    for (std::int64_t u = -2 * e; u <= 2 * e && !brute; ++u) {
      if (!(m.mul(s.p(), unit(u)) == t.p())) {
        continue;
      }
      for (std::int64_t v = -(4 * e + 2); v <= 4 * e + 2 && !brute; ++v) {
        brute = m.mul(m.mul(unit(v), s.q()), unit(u)) == t.q()
                && m.mul(unit(v), s.r()) == t.r();
      }
    }
    if (brute != isg.eq(s, t)) {
      return isg.to_string(s) + " vs " + isg.to_string(t);
    }
    return std::nullopt;
  });
}

template <LcmMonoid M>
void isg_suite(Ctx& c, M const& m) {
  InverseSemigroup<M> isg(m);
  auto const ts = triples_with_zero(isg, c.params.depth);
  std::size_t const n = ts.size();
  auto str = [&](auto const& s) { return isg.to_string(s); };

  TupleSpace t3(n, 3, c.params.sample_cap, c.params.seed);
  if (t3.sampled()) {
    c.note("associativity sampled " + std::to_string(t3.size()) + " triples");
  }
  c.prop("associativity", t3.size(), [&](std::size_t i) -> Failure {
    auto [a, b, d] = t3[i];
    auto const lhs = isg.product(isg.product(ts[a], ts[b]), ts[d]);
    auto const rhs = isg.product(ts[a], isg.product(ts[b], ts[d]));
    if (!isg.eq(lhs, rhs)) {
      return str(ts[a]) + " " + str(ts[b]) + " " + str(ts[d]);
    }
    return std::nullopt;
  });
  c.prop("involution", n * n, [&](std::size_t i) -> Failure {
    auto const& s = ts[i / n];
    auto const& t = ts[i % n];
    if (!isg.eq(isg.star(isg.star(s)), s)
        || !isg.eq(isg.star(isg.product(s, t)), isg.product(isg.star(t), isg.star(s)))) {
      return str(s) + " " + str(t);
    }
    return std::nullopt;
  });
  c.prop("regularity", n, [&](std::size_t i) -> Failure {
    auto const& s = ts[i];
    auto const st = isg.star(s);
    if (!isg.eq(isg.product(isg.product(s, st), s), s)
        || !isg.eq(isg.product(isg.product(st, s), st), st)) {
      return str(s);
    }
    return std::nullopt;
  });

  std::vector<Triple<element_t<M>>> idem;
  for (auto const& s : ts) {
    if (!s.is_zero() && isg.is_idempotent(s)) {
      idem.push_back(s);
    }
  }
  std::size_t const k = idem.size();
  c.prop("idempotents_commute", k * k, [&](std::size_t i) -> Failure {
    auto const& e = idem[i / k];
    auto const& f = idem[i % k];
    auto const ef = isg.product(e, f);
    if (!isg.eq(ef, isg.product(f, e)) || !isg.is_idempotent(ef)) {
      return str(e) + " " + str(f);
    }
    return std::nullopt;
  });
  c.prop("e_star_unitary", n * k, [&](std::size_t i) -> Failure {
    auto const& s = ts[i / k];
    auto const& e = idem[i % k];
    auto const se = isg.product(s, e);
    if (!se.is_zero() && isg.eq(se, e) && !isg.is_idempotent(s)) {
      return str(s) + " " + str(e);
    }
    return std::nullopt;
  });
  c.prop("order_antisymmetric", n * n, [&](std::size_t i) -> Failure {
    auto const& s = ts[i / n];
    auto const& t = ts[i % n];
    if (isg.leq(s, t) && isg.leq(t, s) && !isg.eq(s, t)) {
      return str(s) + " " + str(t);
    }
    return std::nullopt;
  });

  Opposite<M> op(m);
  InverseSemigroup<Opposite<M>> iop(op);
  c.prop("opposite_anti_isomorphism", n * n, [&](std::size_t i) -> Failure {
    auto const& s = ts[i / n];
    auto const& t = ts[i % n];
    auto const lhs = to_opposite(iop, isg.product(s, t));
    auto const rhs = iop.product(to_opposite(iop, t), to_opposite(iop, s));
    if (!iop.eq(lhs, rhs) || !iop.eq(to_opposite(iop, isg.star(s)),
                                      iop.star(to_opposite(iop, s)))) {
      return str(s) + " " + str(t);
    }
    return std::nullopt;
  });

  c.prop("print_parse_roundtrip", n - 1, [&](std::size_t i) -> Failure {
    auto const& s = ts[i + 1];
    auto v = eval_expr(isg, str(s));
    auto const* t = std::get_if<Triple<element_t<M>>>(&v);
    if (!t || !isg.eq(*t, s)) {
      return str(s);
    }
    return std::nullopt;
  });

  if constexpr (std::is_same_v<M, OdometerMonoid>) {
    odometer_equality(c, m);
  }
}

// ---------------------------------------------------------------- constructible

template <LcmMonoid M>
void constructible_suite(Ctx& c, M const& m) {
  using E = element_t<M>;
  using Set = ConstructibleSet<E>;
  auto const elems = m.enumerate_up_to(c.params.depth);
  std::vector<Set> sets;
  for (auto const& p : elems) {
    for (auto const& q : elems) {
      sets.push_back(cs_make(m, p, q));
    }
  }
  std::size_t const ns = sets.size();
  std::size_t const ne = elems.size();
  auto str = [&](Set const& y) { return cs_to_string(m, y); };
  auto const full = cs_full(m);

  c.prop("intersection_laws", ns * ns, [&](std::size_t i) -> Failure {
    auto const& y = sets[i / ns];
    auto const& z = sets[i % ns];
    if (!cs_eq(m, cs_intersect(m, y, z), cs_intersect(m, z, y))
        || !cs_eq(m, cs_intersect(m, y, y), y) || !cs_eq(m, cs_intersect(m, y, full), y)) {
      return str(y) + " " + str(z);
    }
    return std::nullopt;
  });
  c.prop("translation_laws", ns * ne, [&](std::size_t i) -> Failure {
    auto const& y = sets[i / ne];
    auto const& r = elems[i % ne];
    auto const pushed = cs_translate(m, Translate::push, y, r);
    auto const pulled = cs_translate(m, Translate::pull, y, r);
    auto const range = cs_translate(m, Translate::push, full, r);
    auto const domain = cs_translate(m, Translate::pull, full, r);
    if (!cs_eq(m, cs_translate(m, Translate::pull, pushed, r), cs_intersect(m, y, domain))
        || !cs_eq(m, cs_translate(m, Translate::push, pulled, r), cs_intersect(m, y, range))) {
      return str(y) + " by " + m.to_string(r);
    }
    return std::nullopt;
  });

  if constexpr (is_zs<M>) {
    c.note("extensional checks need finite Δ blocks; skipped for this instance");
  } else {
    DeltaTruncation<M> t(m, c.params.delta_depth);
    auto const& basis = t.basis();
    std::size_t const dim = t.dim();
    using Bits = std::vector<bool>;
    auto ext = [&](Set const& y) {
      Bits out(dim, false);
      for (std::size_t j = 0; j < dim; ++j) {
        out[j] = cs_member(m, basis[j], y);
      }
      return out;
    };
    std::vector<Bits> exts(ns);
    for (std::size_t j = 0; j < ns; ++j) {
      exts[j] = ext(sets[j]);
    }

    c.prop("translation_extensional", ns * ne, [&](std::size_t i) -> Failure {
      auto const& y = sets[i / ne];
      auto const& ey = exts[i / ne];
      auto const& r = elems[i % ne];
      Bits push(dim, false);
      Bits pull(dim, false);
      for (std::size_t j = 0; j < dim; ++j) {
        auto const& [a, x] = basis[j];
        auto const target = t.index_of(a, m.mul(r, x));
        if (ey[j] && target) {
          push[*target] = true;
        }
        if (target && ey[*target]) {
          pull[j] = true;
        }
      }
      if (ext(cs_translate(m, Translate::push, y, r)) != push
          || ext(cs_translate(m, Translate::pull, y, r)) != pull) {
        return str(y) + " by " + m.to_string(r);
      }
      return std::nullopt;
    });
    c.prop("intersection_extensional", ns * ns, [&](std::size_t i) -> Failure {
      auto const& ey = exts[i / ns];
      auto const& ez = exts[i % ns];
      Bits meet(dim, false);
      for (std::size_t j = 0; j < dim; ++j) {
        meet[j] = ey[j] && ez[j];
      }
      if (ext(cs_intersect(m, sets[i / ns], sets[i % ns])) != meet) {
        return str(sets[i / ns]) + " " + str(sets[i % ns]);
      }
      return std::nullopt;
    });

    // a constructible set that is a union of at most three others is one of them
    std::vector<Bits> distinct;
    for (auto const& e : exts) {
      if (std::find(e.begin(), e.end(), true) != e.end()
          && std::find(distinct.begin(), distinct.end(), e) == distinct.end()) {
        distinct.push_back(e);
      }
    }
    c.prop("independence", distinct.size(), [&](std::size_t i) -> Failure {
      auto const& y = distinct[i];
      std::vector<std::size_t> below;
      for (std::size_t j = 0; j < distinct.size(); ++j) {
        if (j == i) {
          continue;
        }
        bool sub = true;
        for (std::size_t b = 0; b < dim && sub; ++b) {
          sub = !distinct[j][b] || y[b];
        }
        if (sub) {
          below.push_back(j);
        }
      }
      std::size_t const nb = below.size();
      for (std::size_t a = 0; a < nb; ++a) {
        for (std::size_t b = a; b < nb; ++b) {
          for (std::size_t d = b; d < nb; ++d) {
            bool covered = true;
            for (std::size_t x = 0; x < dim && covered; ++x) {
              covered = !y[x] || distinct[below[a]][x] || distinct[below[b]][x]
                        || distinct[below[d]][x];
            }
            if (covered) {
              return "set " + std::to_string(i) + " is a union of proper members";
            }
          }
        }
      }
      return std::nullopt;
    });
  }
}

// ---------------------------------------------------------------- operator

// J_p matrices keyed by element, shared across sweep threads
template <LcmMonoid M>
class JCache {
 public:
  using E = element_t<M>;
  explicit JCache(DeltaTruncation<M> const& t) : _t(t) {}

  SparseOp j(E const& p, bool adjoint) {
    {
      std::lock_guard lock(_mutex);
      auto const& map = adjoint ? _adj : _plain;
      if (auto it = map.find(p); it != map.end()) {
        return it->second;
      }
    }
    SparseOp op = j_matrix(_t, p, adjoint);
    std::lock_guard lock(_mutex);
    (adjoint ? _adj : _plain).emplace(p, op);
    return op;
  }

  SparseOp represent(Triple<E> const& s) {
    if (s.is_zero()) {
      return SparseOp(_t.dim());
    }
    return j(s.p(), false) * j(s.q(), true) * j(s.r(), false);
  }

 private:
  DeltaTruncation<M> const& _t;
  std::mutex _mutex;
  std::unordered_map<E, SparseOp> _plain;
  std::unordered_map<E, SparseOp> _adj;
};

template <LcmMonoid M>
void operator_suite(Ctx& c, M const& m) {
  using E = element_t<M>;
  InverseSemigroup<M> isg(m);
  DeltaTruncation<M> t(m, c.params.delta_depth);
  bool const exact = !is_zs<M>;
  if (!exact) {
    c.note("Δ window is finite; comparisons exclude boundary columns");
  }
  auto same = [exact](SparseOp const& a, SparseOp const& b) {
    return exact ? a == b : a.equal_on_interior(b);
  };
  auto const ts = triples_with_zero(isg, c.params.depth);
  std::size_t const n = ts.size();
  JCache<M> cache(t);
  std::vector<SparseOp> reps(n, SparseOp(t.dim()));
  for (std::size_t i = 0; i < n; ++i) {
    reps[i] = cache.represent(ts[i]);
  }
  TupleSpace t2(n, 2, c.params.sample_cap / 40, c.params.seed);
  if (t2.sampled()) {
    c.note("represent_multiplicative sampled " + std::to_string(t2.size()) + " pairs");
  }
  c.prop("represent_multiplicative", t2.size(), [&](std::size_t i) -> Failure {
    auto [a, b, unused] = t2[i];
    (void)unused;
    if (!same(reps[a] * reps[b], cache.represent(isg.product(ts[a], ts[b])))) {
      return isg.to_string(ts[a]) + " " + isg.to_string(ts[b]);
    }
    return std::nullopt;
  });
  c.prop("expectation", n, [&](std::size_t i) -> Failure {
    if (!same(expectation(t, isg, ts[i]), reps[i].diagonal())) {
      return isg.to_string(ts[i]);
    }
    return std::nullopt;
  });

  auto const letters = m.enumerate_up_to(1);
  std::mt19937_64 rng(c.params.seed);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::bernoulli_distribution adj(0.5);
  std::vector<std::vector<Token<E>>> words(c.params.random_words);
  for (auto& w : words) {
    std::size_t const l = len(rng);
    for (std::size_t j = 0; j < l; ++j) {
      auto const& p = letters[pick(rng)];
      w.push_back(Token<E>{p, adj(rng)});
    }
  }
  c.prop("reduce_word", words.size(), [&](std::size_t i) -> Failure {
    auto const normal = reduce_word(isg, words[i]);
    SparseOp direct = SparseOp::identity(t.dim());
    for (auto const& tok : words[i]) {
      direct = direct * cache.j(tok.p, tok.adjoint);
    }
    if (!same(cache.represent(normal), direct)) {
      std::string s;
      for (auto const& tok : words[i]) {
        s += (tok.adjoint ? "J*" : "J") + m.to_string(tok.p) + " ";
      }
      return s + "-> " + isg.to_string(normal);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- spectra

template <LcmMonoid M>
std::optional<std::size_t> find_idempotent(IdempotentSemilattice<M> const& es,
                                           InverseSemigroup<M> const& isg,
                                           Triple<element_t<M>> const& e) {
  for (std::size_t i = 0; i < es.elements.size(); ++i) {
    if (isg.eq(es.elements[i], e)) {
      return i;
    }
  }
  return std::nullopt;
}

// {e_x : |x| = 1} against the top of E(S_P) truncated at `depth`
template <LcmMonoid M>
SweepResult cover_of_top(InverseSemigroup<M> const& isg, std::size_t depth) {
  auto const& m = isg.monoid();
  auto const es = build_semilattice(isg, depth);
  std::vector<std::size_t> cover;
  for (auto const& x : m.enumerate_up_to(1)) {
    if (m.length(x) != 1) {
      continue;
    }
    auto idx = find_idempotent(es, isg, isg.idempotent(m.canonical_right(x), m.identity()));
    if (idx && std::find(cover.begin(), cover.end(), *idx) == cover.end()) {
      cover.push_back(*idx);
    }
  }
  SweepResult r;
  r.cases = es.lattice.size();
  if (auto bad = cover_counterexample(es.lattice, cover, es.lattice.top())) {
    r.failures = 1;
    r.counterexamples.push_back("misses " + isg.to_string(es.elements[*bad]));
  }
  return r;
}

template <LcmMonoid M>
void spectra_suite(Ctx& c, M const& m) {
  InverseSemigroup<M> isg(m);
  std::size_t const top = std::max<std::size_t>(1, std::min<std::size_t>(c.params.depth, 2));
  std::vector<std::string> counts;
  c.prop("phi_isomorphism", top, [&](std::size_t i) -> Failure {
    std::size_t const d = i + 1;
    auto rep = check_phi(isg, build_semilattice(isg, d),
                         build_ideal_semilattice(m, Side::left, d),
                         build_ideal_semilattice(m, Side::right, d));
    if (!rep.bijective || !rep.meet_preserving) {
      return "depth " + std::to_string(d) + ": " + rep.counterexample.value_or("mismatch");
    }
    return std::nullopt;
  });
  c.prop("semilattice_valid", top, [&](std::size_t i) -> Failure {
    return build_semilattice(isg, i + 1).lattice.validate();
  });
  for (std::size_t d = 1; d <= top; ++d) {
    auto const left = build_ideal_semilattice(m, Side::left, d);
    auto const right = build_ideal_semilattice(m, Side::right, d);
    auto const corr = check_product_correspondence(left.lattice, right.lattice);
    SweepResult r;
    r.cases = corr.product_filters;
    if (!corr.bijective || !corr.ultrafilters_preserved) {
      r.failures = 1;
      r.counterexamples.push_back("depth " + std::to_string(d));
    }
    c.add("product_filters_depth_" + std::to_string(d), r);
    c.note("depth " + std::to_string(d) + ": filters " + std::to_string(corr.left_filters)
           + " x " + std::to_string(corr.right_filters) + " = "
           + std::to_string(corr.product_filters) + ", ultrafilters "
           + std::to_string(corr.left_ultrafilters) + " x "
           + std::to_string(corr.right_ultrafilters) + " = "
           + std::to_string(corr.product_ultrafilters));
  }
  c.add("cover_of_top", cover_of_top(isg, top));

  if constexpr (!is_zs<M>) {
    // θ_s θ_t = θ_st on pairs of principal filters, compared where both are exact
    using E = element_t<M>;
    std::size_t const fd = top + 2;
    auto const small = isg.enumerate(1);
    auto const gens = m.enumerate_up_to(1);
    std::vector<FilterState<E>> states;
    for (auto const& g : gens) {
      for (auto const& h : gens) {
        FilterState<E> x;
        x.left = principal_filter(m, Side::left, g, fd);
        x.right = principal_filter(m, Side::right, h, fd);
        x.left_exact = x.right_exact = static_cast<long>(fd);
        states.push_back(std::move(x));
      }
    }
    std::size_t const ns = small.size();
    std::size_t const nx = states.size();
    c.prop("filter_action_functorial", ns * ns * nx, [&](std::size_t i) -> Failure {
      auto const& s = small[i / (ns * nx)];
      auto const& u = small[(i / nx) % ns];
      auto const& x = states[i % nx];
      auto const inner = act_on_filter(isg, u, x, fd);
      if (inner.truncated || !inner.state) {
        return std::nullopt;
      }
      auto const outer = act_on_filter(isg, s, *inner.state, fd);
      auto const direct = act_on_filter(isg, isg.product(s, u), x, fd);
      if (outer.truncated || direct.truncated) {
        return std::nullopt;
      }
      std::string const where = isg.to_string(s) + " after " + isg.to_string(u);
      if (outer.state.has_value() != direct.state.has_value()) {
        return where + ": domains differ";
      }
      if (outer.state
          && !filter_states_agree(m, *outer.state, *direct.state,
                                  std::min(outer.state->left_exact, direct.state->left_exact),
                                  std::min(outer.state->right_exact,
                                           direct.state->right_exact))) {
        return where + ": images differ";
      }
      return std::nullopt;
    });
  }
}

// ---------------------------------------------------------------- groupoid

void groupoid_suite(Ctx& c, FreeMonoid const& m) {
  InverseSemigroup<FreeMonoid> isg(m);
  auto ts = isg.enumerate(c.params.depth);
  std::size_t const n = ts.size();
  c.prop("cocycle_additive", n * n, [&](std::size_t i) -> Failure {
    auto const& s = ts[i / n];
    auto const& t = ts[i % n];
    auto const st = isg.product(s, t);
    if (!st.is_zero() && cocycle_h(st) != cocycle_h(s) + cocycle_h(t)) {
      return isg.to_string(s) + " " + isg.to_string(t);
    }
    return std::nullopt;
  });
  c.prop("cocycle_idempotent_pure", n, [&](std::size_t i) -> Failure {
    if (cocycle_h(ts[i]) == 0 && !isg.is_idempotent(ts[i])) {
      return isg.to_string(ts[i]);
    }
    return std::nullopt;
  });
  auto const points = enumerate_points(m.alphabet(), 1, 2);
  c.prop("theta_functorial", n * n, [&](std::size_t i) -> Failure {
    auto const& s = ts[i / n];
    auto const& t = ts[i % n];
    auto const st = isg.product(s, t);
    for (auto const& pt : points) {
      auto const mid = theta_apply(t, pt);
      if (!mid) {
        continue;
      }
      auto const outer = theta_apply(s, *mid);
      if (!outer) {
        continue;
      }
      auto const direct = theta_apply(st, pt);
      if (!direct || !(*direct == *outer)) {
        return isg.to_string(s) + " " + isg.to_string(t) + " at " + to_string(pt);
      }
    }
    return std::nullopt;
  });

  long const window = static_cast<long>(c.params.depth);
  auto rep = check_full_shift(isg, c.params.depth, 2, 2, window, c.params.exec);
  c.add("germ_eq_matches_search", rep.criterion_vs_search);
  c.add("phi_bijective", rep.bijection);
  c.add("phi_composition", rep.composition);
  c.add("theta_is_shift", rep.theta_is_shift);
  c.note(std::to_string(rep.germs) + " germs in " + std::to_string(rep.germ_classes)
         + " classes over " + std::to_string(rep.points)
         + " eventually periodic points; " + std::to_string(rep.pairs)
         + " pairs (n, pt) with |n| <= " + std::to_string(window));
}

// ---------------------------------------------------------------- nekrashevych

template <SelfSimilarBackend B>
void nekrashevych_suite(Ctx& c, ZappaSzep<B> const& m, bool certified) {
  using G = typename B::group_type;
  using Mono = Monomial<G>;
  B const& b = m.backend();
  auto const group = b.enumerate_group();
  auto const words = words_up_to(b.alphabet(), std::min<std::size_t>(c.params.depth, 2));
  std::vector<Mono> monos{Mono::zero()};
  for (auto const& a : words) {
    for (auto const& g : group) {
      for (auto const& d : words) {
        monos.push_back(Mono::make(a, g, d));
      }
    }
  }
  std::size_t const nm = monos.size();
  auto ms = [&](Mono const& x) { return to_string(b, x); };
  TupleSpace t3(nm, 3, c.params.sample_cap, c.params.seed);
  if (t3.sampled()) {
    c.note("monomial_associativity sampled " + std::to_string(t3.size()) + " triples");
  }
  c.prop("monomial_associativity", t3.size(), [&](std::size_t i) -> Failure {
    auto [x, y, z] = t3[i];
    if (!(mono_mul(b, mono_mul(b, monos[x], monos[y]), monos[z])
          == mono_mul(b, monos[x], mono_mul(b, monos[y], monos[z])))) {
      return ms(monos[x]) + " " + ms(monos[y]) + " " + ms(monos[z]);
    }
    return std::nullopt;
  });
  c.prop("monomial_star", nm * nm, [&](std::size_t i) -> Failure {
    auto const& x = monos[i / nm];
    auto const& y = monos[i % nm];
    if (!(mono_star(b, mono_star(b, x)) == x)
        || !(mono_star(b, mono_mul(b, x, y)) == mono_mul(b, mono_star(b, y), mono_star(b, x)))) {
      return ms(x) + " " + ms(y);
    }
    return std::nullopt;
  });

  InverseSemigroup<ZappaSzep<B>> isg(m);
  auto const ts = triples_with_zero(isg, c.params.depth);
  std::size_t const n = ts.size();
  std::vector<Mono> pis(n);
  for (std::size_t i = 0; i < n; ++i) {
    pis[i] = pi_represent(isg, ts[i]);
  }
  c.prop("pi_multiplicative", n * n, [&](std::size_t i) -> Failure {
    auto const& s = ts[i / n];
    auto const& t = ts[i % n];
    if (!(pi_represent(isg, isg.product(s, t)) == mono_mul(b, pis[i / n], pis[i % n]))) {
      return isg.to_string(s) + " " + isg.to_string(t);
    }
    return std::nullopt;
  });
  c.prop("pi_involutive", n, [&](std::size_t i) -> Failure {
    if (!(pi_represent(isg, isg.star(ts[i])) == mono_star(b, pis[i]))) {
      return isg.to_string(ts[i]);
    }
    return std::nullopt;
  });
  c.prop("pi_well_defined", n - 1, [&](std::size_t i) -> Failure {
    auto const& s = ts[i + 1];
    for (auto const& u : group) {
      for (auto const& v : group) {
        auto const uu = m.unit(u);
        auto const vv = m.unit(v);
        auto t = isg.try_make(m.mul(s.p(), uu), m.mul(m.mul(vv, s.q()), uu), m.mul(vv, s.r()));
        if (!t || !(pi_represent(isg, *t) == pis[i + 1])) {
          return isg.to_string(s) + " moved by " + b.group_to_string(u) + ", "
                 + b.group_to_string(v);
        }
      }
    }
    return std::nullopt;
  });
  c.prop("pi_idempotent_form", n - 1, [&](std::size_t i) -> Failure {
    auto const& s = ts[i + 1];
    if (isg.is_idempotent(s)
        && !(pis[i + 1] == Mono::make(s.p().word, b.group_identity(), s.p().word))) {
      return isg.to_string(s);
    }
    return std::nullopt;
  });

  if (!certified) {
    c.note("tightness is not certified for this backend; f_β and cover checks skipped");
    return;
  }
  auto const betas = words_up_to(b.alphabet(), 3);
  c.prop("tight_f_beta", betas.size(), [&](std::size_t i) -> Failure {
    if (!(pi_represent(isg, f_beta(isg, betas[i])) == mono_identity(b))) {
      return to_string(betas[i]);
    }
    return std::nullopt;
  });
  c.add("cover_of_top", cover_of_top(isg, std::max<std::size_t>(1, std::min<std::size_t>(c.params.depth, 2))));
}

}  // namespace

// ---------------------------------------------------------------- driver

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names{"constructible", "groupoid", "instances",
                                              "isg",           "lcm",      "nekrashevych",
                                              "operator",      "spectra"};
  return names;
}

std::vector<std::string> expand_suites(std::vector<std::string> const& names) {
  std::vector<std::string> out;
  for (auto const& n : names) {
    if (n == "all") {
      out.insert(out.end(), suite_names().begin(), suite_names().end());
    } else if (std::find(suite_names().begin(), suite_names().end(), n) != suite_names().end()) {
      out.push_back(n);
    } else {
      throw UsageError("unknown suite '" + n + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CheckReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](PropertyResult const& p) { return p.passed(); });
}

std::size_t CheckReport::cases() const {
  std::size_t total = 0;
  for (auto const& p : properties) {
    total += p.result.cases;
  }
  return total;
}

PropertyResult const* CheckReport::find(std::string const& suite,
                                        std::string const& name) const {
  for (auto const& p : properties) {
    if (p.suite == suite && p.name == name) {
      return &p;
    }
  }
  return nullptr;
}

CheckReport run_check(std::vector<std::string> const& names,
                      Instance const& inst,
                      SuiteParams const& params) {
  CheckReport rep;
  rep.suites = expand_suites(names);
  rep.instance = instance_name(inst);
  rep.params = params;
  rep.certified = instance_certified(inst);
  if (!rep.certified) {
    rep.notes.push_back("instance uses bounded searches; results are not certified");
  }

  for (auto const& suite : rep.suites) {
    Ctx c(suite, params, rep);
    std::visit(
        [&](auto const& m) {
          using M = std::decay_t<decltype(m)>;
          if (suite == "lcm") {
            lcm_suite(c, m, rep.certified);
          } else if (suite == "instances") {
            instances_suite(c, m, rep.certified);
          } else if (suite == "isg") {
            isg_suite(c, m);
          } else if (suite == "constructible") {
            constructible_suite(c, m);
          } else if (suite == "operator") {
            operator_suite(c, m);
          } else if (suite == "spectra") {
            spectra_suite(c, m);
          } else if (suite == "groupoid") {
            if constexpr (std::is_same_v<M, FreeMonoid>) {
              groupoid_suite(c, m);
            } else {
              c.note("only defined for free monoids");
            }
          } else if (suite == "nekrashevych") {
            if constexpr (is_zs<M>) {
              nekrashevych_suite(c, m, rep.certified);
            } else {
              c.note("only defined for Zappa–Szép instances");
            }
          }
        },
        inst);
  }
  if (!rep.certified) {
    for (auto& p : rep.properties) {
      p.inconclusive = p.result.failures > 0;
    }
  }
  std::stable_sort(rep.properties.begin(), rep.properties.end(),
                   [](PropertyResult const& a, PropertyResult const& b) {
                     return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
                   });
  return rep;
}

std::string report_json(CheckReport const& rep, std::optional<double> wall_ms) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["suites"] = rep.suites;
  j["instance"] = rep.instance;
  j["params"] = {{"depth", rep.params.depth},
                 {"group_bound", rep.params.group_bound},
                 {"delta_depth", rep.params.delta_depth},
                 {"random_words", rep.params.random_words}};
  j["seed"] = rep.params.seed;
  j["certified"] = rep.certified;
  ordered_json props = ordered_json::array();
  for (auto const& p : rep.properties) {
    props.push_back({{"suite", p.suite},
                     {"name", p.name},
                     {"cases", p.result.cases},
                     {"failures", p.result.failures},
                     {"counterexamples", p.result.counterexamples},
                     {"inconclusive", p.inconclusive},
                     {"passed", p.passed()}});
  }
  j["properties"] = props;
  j["notes"] = rep.notes;
  j["cases"] = rep.cases();
  j["passed"] = rep.passed();
  if (wall_ms) {
    j["wall_ms"] = *wall_ms;
  }
  return j.dump(2) + "\n";
}

std::string report_text(CheckReport const& rep, std::optional<double> wall_ms) {
  std::ostringstream os;
  os << "instance " << rep.instance << "  depth " << rep.params.depth << "  group-bound "
     << rep.params.group_bound << "  delta-depth " << rep.params.delta_depth << "  seed "
     << rep.params.seed << (rep.certified ? "" : "  (not certified)") << "\n";
  for (auto const& p : rep.properties) {
    os << (p.inconclusive ? "??   " : p.passed() ? "ok   " : "FAIL ") << p.suite << "." << p.name << "  "
       << p.result.cases << " cases, " << p.result.failures << " failures\n";
    for (auto const& ce : p.result.counterexamples) {
      os << "       " << ce << "\n";
    }
  }
  for (auto const& n : rep.notes) {
    os << "note " << n << "\n";
  }
  os << (rep.passed() ? "PASS" : "FAIL") << "  " << rep.cases() << " cases";
  if (wall_ms) {
    os << "  " << *wall_ms << " ms";
  }
  os << "\n";
  return os.str();
}

}  // namespace lcm
