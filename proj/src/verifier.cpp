#include "suzuki/verifier.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "suzuki/parallel.hpp"

namespace suzuki {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::int64_t n) {
  const std::int64_t r = isqrt(n);
  return r >= 0 && r * r == n;
}

std::string describe(const Field& F, FieldElement a) { (void)F; return std::to_string(a.index); }

std::string describe(const Group& G, GroupElement g) {
  return "(" + describe(G.field(), g.a) + "," + describe(G.field(), g.b) + ")";
}

std::string describe(ClassId c) {
  return c.is_central() ? "C(b=" + std::to_string(c.key) + ")"
                        : "C(a=" + std::to_string(c.a.index) + ",x=" + std::to_string(c.key) + ")";
}

std::string describe(const CharId& chi) {
  std::string s = std::string(char_family_name(chi.family)) + "(v=" + std::to_string(chi.v.index);
  if (chi.family == CharFamily::F2Lin || chi.family == CharFamily::OddNonLin2 || chi.family == CharFamily::OddNonLinP)
    s += ",w=" + std::to_string(chi.w);
  if (chi.family == CharFamily::EvenMid || chi.family == CharFamily::OddNonLinP) s += ",s=" + std::to_string(chi.s);
  if (chi.family == CharFamily::OddNonLin2) s += ",eps=" + std::to_string(chi.s);
  return s + ")";
}

bool is_trivial_size(std::int64_t v, std::int64_t k) { return k == 0 || k == 1 || k == v - 1 || k == v; }

void require_group(const VerifyContext& ctx) {
  if (!ctx.group) throw Error(Errc::InvalidArgument, "verification needs a group");
}

void require_table(const VerifyContext& ctx, const CentralSet& S) {
  if (!ctx.table) throw Error(Errc::InvalidArgument, "the character method needs a character table");
  if (!ctx.table->field().same_as(S.field())) throw Error(Errc::ContextMismatch, "set and table use different fields");
}

std::vector<std::uint64_t> indices_of(const Group& G, const std::vector<GroupElement>& D) {
  std::vector<std::uint64_t> out;
  out.reserve(D.size());
  for (auto g : D) out.push_back(G.index(g));
  return out;
}

void guard_pairs(std::uint64_t d, std::uint64_t e, std::uint64_t order) {
  if (static_cast<double>(d) * static_cast<double>(e) > kConvolutionBudget)
    throw Error(Errc::TooLarge, "group-ring convolution over " + std::to_string(d) + " x " + std::to_string(e) +
                                    " pairs exceeds the budget");
  if (order > (std::uint64_t{1} << 26)) throw Error(Errc::TooLarge, "group too large for a dense group-ring vector");
}

// Splits the outer loop into chunks; each worker owns one accumulator.
template <class Body>
GroupRingVec accumulate(std::uint64_t order, std::uint64_t outer, unsigned threads, Body&& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::uint64_t>(outer, 1))));
  std::vector<std::vector<std::int64_t>> acc(workers);
  const std::uint64_t chunks = std::min<std::uint64_t>(outer, 256);
  parallel_for(chunks, workers, [&](std::uint64_t c, unsigned w) {
    if (acc[w].empty()) acc[w].assign(order, 0);
    const std::uint64_t lo = outer * c / chunks, hi = outer * (c + 1) / chunks;
    for (std::uint64_t i = lo; i < hi; ++i) body(i, acc[w]);
  });
  GroupRingVec out(order, 0);
  for (auto& a : acc)
    if (!a.empty())
      for (std::uint64_t i = 0; i < order; ++i) out[i] += a[i];
  return out;
}

}  // namespace

// ---- parameters ----------------------------------------------------------------------

std::optional<DSParams> ds_params_for(std::int64_t v, std::int64_t k) {
  if (v < 2 || k < 0 || k > v) return std::nullopt;
  const std::int64_t num = checked_mul(k, k - 1);
  if (num % (v - 1) != 0) return std::nullopt;
  const std::int64_t lambda = num / (v - 1);
  return DSParams{v, k, lambda, k - lambda};
}

bool ds_params_consistent(const DSParams& p) {
  return p.v >= 2 && checked_mul(p.lambda, p.v - 1) == checked_mul(p.k, p.k - 1) && p.n == p.k - p.lambda;
}

bool pds_params_consistent(const PDSParams& p) {
  return p.v >= 2 && p.lambda >= 0 && p.mu >= 0 &&
         checked_mul(p.k, p.k - 1) == checked_add(checked_mul(p.lambda, p.k), checked_mul(p.mu, p.v - 1 - p.k));
}

std::vector<LinkingParams> linking_params_for(const DSParams& p) {
  std::vector<LinkingParams> out;
  if (!is_square(p.n)) return out;
  const std::int64_t s = isqrt(p.n);
  for (int sign : {1, -1}) {
    const std::int64_t num = checked_mul(p.k, p.k + sign * s);
    if (num % p.v != 0) continue;
    const std::int64_t eta = num / p.v;
    out.push_back({eta - sign * s, eta, 0});
  }
  return out;
}

std::optional<int> latin_square_type(const PDSParams& p) {
  if (!is_square(p.v)) return std::nullopt;
  const std::int64_t n = isqrt(p.v);
  for (int eps : {1, -1}) {
    const std::int64_t d = n - eps;
    if (d <= 0 || p.k % d != 0) continue;
    const std::int64_t r = p.k / d;
    if (p.lambda == r * r + eps * (n - 3 * r) && p.mu == r * r - eps * r) return eps;
  }
  return std::nullopt;
}

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::GroupRing: return "groupring";
    case Method::Character: return "character";
    case Method::Both: return "both";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "groupring") return Method::GroupRing;
  if (s == "character") return Method::Character;
  if (s == "both") return Method::Both;
  throw Error(Errc::ParseError, "unknown method '" + s + "'");
}

void VerifyReport::add_witness(std::string kind, std::string detail) {
  ++witness_total;
  if (witnesses.size() < kWitnessCap) witnesses.push_back({std::move(kind), std::move(detail)});
}

// ---- group ring --------------------------------------------------------------------------

FiniteGroupView view_of(const Group& G) {
  FiniteGroupView v;
  v.order = G.order();
  v.identity = G.index(Group::identity());
  v.div = [&G](std::uint64_t x, std::uint64_t y) { return G.index(G.div(G.element(x), G.element(y))); };
  v.inv = [&G](std::uint64_t x) { return G.index(G.inv(G.element(x))); };
  return v;
}

GroupRingVec convolve(const FiniteGroupView& G, const std::vector<std::uint64_t>& D,
                      const std::vector<std::uint64_t>& E, unsigned threads) {
  guard_pairs(D.size(), E.size(), G.order);
  return accumulate(G.order, D.size(), threads, [&](std::uint64_t i, std::vector<std::int64_t>& acc) {
    for (auto y : E) ++acc[G.div(D[i], y)];
  });
}

GroupRingVec convolve(const Group& G, const std::vector<GroupElement>& D, const std::vector<GroupElement>& E,
                      unsigned threads) {
  guard_pairs(D.size(), E.size(), G.order());
  const Field& F = G.field();
  const std::uint64_t q = F.order();
  // y^{-1} = (a', b'); x y^{-1} = (a + a', b + b' + a theta(a'))
  std::vector<GroupElement> inv(E.size());
  std::vector<FieldElement> th(E.size());
  for (std::size_t j = 0; j < E.size(); ++j) {
    inv[j] = G.inv(E[j]);
    th[j] = F.theta(inv[j].a);
  }
  return accumulate(G.order(), D.size(), threads, [&](std::uint64_t i, std::vector<std::int64_t>& acc) {
    const GroupElement x = D[i];
    for (std::size_t j = 0; j < inv.size(); ++j) {
      const FieldElement a = F.add(x.a, inv[j].a);
      const FieldElement b = F.add(F.add(x.b, inv[j].b), F.mul(x.a, th[j]));
      ++acc[std::uint64_t{a.index} * q + b.index];
    }
  });
}

GroupRingVec convolve_ddinv(const Group& G, const CentralSet& S, unsigned threads) {
  if (!S.field().same_as(G.field())) throw Error(Errc::ContextMismatch, "set and group use different fields");
  const double k = static_cast<double>(S.cardinality());
  if (k * k > kConvolutionBudget) throw Error(Errc::TooLarge, "|S|^2 exceeds the convolution budget");
  const auto elems = S.elements(G);
  return convolve(G, elems, elems, threads);
}

GroupRingVec convolve_ddinv(const FiniteGroupView& G, const std::vector<std::uint64_t>& D, unsigned threads) {
  return convolve(G, D, D, threads);
}

namespace {

std::string element_name(const FiniteGroupView& G, std::uint64_t x, const Group* suz) {
  (void)G;
  return suz ? describe(*suz, suz->element(x)) : "#" + std::to_string(x);
}

std::vector<char> membership(std::uint64_t order, const std::vector<std::uint64_t>& D) {
  std::vector<char> in(order, 0);
  for (auto x : D) {
    if (x >= order) throw Error(Errc::InvalidArgument, "element index out of range");
    if (in[x]) throw Error(Errc::InvalidArgument, "element listed twice");
    in[x] = 1;
  }
  return in;
}

VerifyReport ds_groupring(const FiniteGroupView& G, const std::vector<std::uint64_t>& D, unsigned threads,
                          const Group* suz, const std::function<GroupRingVec()>& conv_fn) {
  const auto t0 = Clock::now();
  VerifyReport r;
  r.check = "ds";
  r.method = "groupring";
  const auto v = static_cast<std::int64_t>(G.order);
  const auto k = static_cast<std::int64_t>(D.size());
  membership(G.order, D);
  r.trivial = is_trivial_size(v, k);
  const auto params = ds_params_for(v, k);
  if (!params) {
    r.add_witness("parameter", "lambda = k(k-1)/(v-1) is not an integer for v=" + std::to_string(v) +
                                   ", k=" + std::to_string(k));
    r.seconds = since(t0);
    return r;
  }
  r.ds = params;
  const GroupRingVec c = conv_fn ? conv_fn() : convolve(G, D, D, threads);
  r.checked = G.order;
  for (std::uint64_t g = 0; g < G.order; ++g) {
    const std::int64_t want = g == G.identity ? k : params->lambda;
    if (c[g] != want)
      r.add_witness("element", element_name(G, g, suz) + ": coefficient " + std::to_string(c[g]) + ", expected " +
                                   std::to_string(want));
  }
  r.result = r.witness_total == 0;
  r.seconds = since(t0);
  return r;
}

VerifyReport pds_groupring(const FiniteGroupView& G, const std::vector<std::uint64_t>& D, unsigned threads,
                           const Group* suz, const std::function<GroupRingVec()>& conv_fn) {
  const auto t0 = Clock::now();
  VerifyReport r;
  r.check = "pds";
  r.method = "groupring";
  const auto v = static_cast<std::int64_t>(G.order);
  const auto k = static_cast<std::int64_t>(D.size());
  const auto in = membership(G.order, D);
  r.trivial = is_trivial_size(v, k);
  if (in[G.identity]) r.add_witness("regularity", "identity lies in the set");
  for (auto x : D) {
    const std::uint64_t y = G.inv(x);
    if (!in[y]) r.add_witness("regularity", "inverse of " + element_name(G, x, suz) + " is missing");
  }
  if (r.witness_total) {
    r.seconds = since(t0);
    return r;
  }
  const GroupRingVec c = conv_fn ? conv_fn() : convolve(G, D, D, threads);
  r.checked = G.order;
  std::optional<std::int64_t> lambda, mu;
  std::optional<std::uint64_t> lambda_at, mu_at;
  if (c[G.identity] != k)
    r.add_witness("element", "identity: coefficient " + std::to_string(c[G.identity]) + ", expected " + std::to_string(k));
  for (std::uint64_t g = 0; g < G.order; ++g) {
    if (g == G.identity) continue;
    auto& ref = in[g] ? lambda : mu;
    auto& at = in[g] ? lambda_at : mu_at;
    if (!ref) {
      ref = c[g];
      at = g;
    } else if (c[g] != *ref) {
      r.add_witness("element", element_name(G, g, suz) + ": coefficient " + std::to_string(c[g]) + ", but " +
                                   element_name(G, *at, suz) + " has " + std::to_string(*ref) +
                                   (in[g] ? " (both in the set)" : " (both outside the set)"));
    }
  }
  if (!lambda) lambda = mu;
  if (!mu) mu = lambda;
  if (!lambda) lambda = mu = 0;
  if (r.witness_total == 0) {
    r.pds = PDSParams{v, k, *lambda, *mu};
    r.latin_epsilon = latin_square_type(*r.pds);
    r.result = true;
  }
  r.seconds = since(t0);
  return r;
}

VerifyReport merge_both(VerifyReport gr, VerifyReport ch) {
  VerifyReport r = gr;
  r.method = "both";
  r.result = gr.result && ch.result;
  r.checked = gr.checked + ch.checked;
  r.seconds = gr.seconds + ch.seconds;
  r.witnesses.clear();
  r.witness_total = 0;
  const bool agree = gr.result == ch.result && gr.trivial == ch.trivial &&
                     (!gr.result || (gr.ds == ch.ds && gr.pds == ch.pds && gr.latin_epsilon == ch.latin_epsilon));
  if (!agree) {
    r.result = false;
    r.add_witness("engine", std::string("engines disagree: groupring ") + (gr.result ? "pass" : "fail") +
                                ", character " + (ch.result ? "pass" : "fail"));
  }
  for (auto& w : gr.witnesses) r.add_witness(w.kind, "groupring: " + w.detail);
  for (auto& w : ch.witnesses) r.add_witness(w.kind, "character: " + w.detail);
  r.witness_total = std::max<std::uint64_t>(r.witness_total, gr.witness_total + ch.witness_total + (agree ? 0 : 1));
  for (auto& n : gr.notes) r.notes.push_back(n);
  for (auto& n : ch.notes) r.notes.push_back(n);
  if (!r.ds) r.ds = ch.ds;
  if (!r.pds) r.pds = ch.pds;
  return r;
}

struct CharValues {
  std::vector<CycInt> omega;
  std::vector<std::string> error;  // non-empty when omega could not be formed
};

CharValues omega_all(const CharacterTable& T, const CentralSet& S, unsigned threads) {
  CharValues cv;
  cv.omega.resize(T.count());
  cv.error.resize(T.count());
  parallel_for(T.count() - 1, threads, [&](std::uint64_t i, unsigned) {
    try {
      cv.omega[i + 1] = T.omega(T.at(i + 1), S);
    } catch (const Error& e) {
      cv.error[i + 1] = e.what();
    }
  });
  return cv;
}

void finish_partial(VerifyReport& r, const CharacterTable& T) {
  if (T.complete() || r.witness_total) return;
  throw Error(Errc::OmittedCharacter, "all " + std::to_string(T.count() - 1) +
                                          " listed characters pass, but the table omits " +
                                          std::to_string(T.omitted_count()) + " characters; use the group-ring method");
}

VerifyReport ds_character(const VerifyContext& ctx, const CentralSet& S) {
  const auto t0 = Clock::now();
  require_table(ctx, S);
  const CharacterTable& T = *ctx.table;
  VerifyReport r;
  r.check = "ds";
  r.method = "character";
  const auto q = static_cast<std::int64_t>(S.field().order());
  const std::int64_t v = q * q;
  const auto k = static_cast<std::int64_t>(S.cardinality());
  r.trivial = is_trivial_size(v, k);
  const auto params = ds_params_for(v, k);
  if (!params) {
    r.add_witness("parameter", "lambda = k(k-1)/(v-1) is not an integer for v=" + std::to_string(v) +
                                   ", k=" + std::to_string(k));
    r.seconds = since(t0);
    return r;
  }
  r.ds = params;
  const CharValues cv = omega_all(T, S, ctx.threads);
  r.checked = T.count() - 1;
  for (std::uint64_t i = 1; i < T.count(); ++i) {
    const CharId chi = T.at(i);
    if (!cv.error[i].empty()) {
      r.add_witness("character", describe(chi) + ": " + cv.error[i]);
      continue;
    }
    std::int64_t nsq = 0;
    try {
      nsq = cv.omega[i].norm_sq();
    } catch (const Error&) {
      r.add_witness("character", describe(chi) + ": |omega|^2 is not a rational integer, omega = " + cv.omega[i].str());
      continue;
    }
    if (nsq != params->n)
      r.add_witness("character", describe(chi) + ": |omega|^2 = " + std::to_string(nsq) + ", expected n = " +
                                     std::to_string(params->n) + ", omega = " + cv.omega[i].str());
  }
  finish_partial(r, T);
  r.result = r.witness_total == 0;
  r.seconds = since(t0);
  return r;
}

VerifyReport pds_character(const VerifyContext& ctx, const CentralSet& S) {
  const auto t0 = Clock::now();
  require_group(ctx);
  require_table(ctx, S);
  const CharacterTable& T = *ctx.table;
  const Group& G = *ctx.group;
  VerifyReport r;
  r.check = "pds";
  r.method = "character";
  const auto q = static_cast<std::int64_t>(S.field().order());
  const std::int64_t v = q * q;
  const auto k = static_cast<std::int64_t>(S.cardinality());
  r.trivial = is_trivial_size(v, k);
  if (S.B().test(0)) r.add_witness("regularity", "identity lies in the set");
  S.for_each_class([&](ClassId c) {
    if (!S.contains(inverse_class(G, c))) r.add_witness("regularity", "inverse of class " + describe(c) + " is missing");
  });
  if (r.witness_total) {
    r.seconds = since(t0);
    return r;
  }
  const CharValues cv = omega_all(T, S, ctx.threads);
  r.checked = T.count() - 1;
  std::set<std::int64_t> values;
  for (std::uint64_t i = 1; i < T.count(); ++i) {
    const CharId chi = T.at(i);
    if (!cv.error[i].empty()) r.add_witness("character", describe(chi) + ": " + cv.error[i]);
    else if (!cv.omega[i].is_integer())
      r.add_witness("character", describe(chi) + ": omega = " + cv.omega[i].str() + " is not a rational integer");
    else values.insert(cv.omega[i].as_integer());
  }
  if (values.size() > 2) {
    std::string list;
    for (auto x : values) list += (list.empty() ? "" : ", ") + std::to_string(x);
    r.add_witness("character", "omega takes more than two values: " + list);
  }
  if (r.witness_total) {
    finish_partial(r, T);
    r.seconds = since(t0);
    return r;
  }
  // Recover (lambda, mu) from the roots of x^2 - (lambda - mu) x - (k - mu).
  std::int64_t lambda = 0, mu = 0;
  bool ok = true;
  if (values.size() == 2) {
    const std::int64_t r1 = *values.begin(), r2 = *values.rbegin();
    mu = checked_add(k, checked_mul(r1, r2));
    lambda = mu + r1 + r2;
  } else if (values.size() == 1) {
    const std::int64_t x = *values.begin();
    const std::int64_t den = checked_add(checked_mul(x, v - 1), k);
    const std::int64_t num = checked_mul(k, k - 1) - checked_mul(k - x * x, v - 1);
    std::int64_t delta = 0;
    if (den != 0) {
      if (num % den != 0) ok = false;
      else delta = num / den;
    }
    mu = k - x * x + delta * x;
    lambda = mu + delta;
  }
  // trivial character: k^2 - (lambda - mu) k - (k - mu) = mu v
  if (ok && checked_mul(k, k) - (lambda - mu) * k - (k - mu) != checked_mul(mu, v)) ok = false;
  if (ok && (lambda < 0 || mu < 0)) ok = false;
  if (!ok) {
    r.add_witness("parameter", "no (lambda, mu) is consistent with the omega values and the trivial character");
  } else {
    r.pds = PDSParams{v, k, lambda, mu};
    r.latin_epsilon = latin_square_type(*r.pds);
  }
  finish_partial(r, T);
  r.result = r.witness_total == 0;
  if (!r.result) r.pds.reset(), r.latin_epsilon.reset();
  r.seconds = since(t0);
  return r;
}

}  // namespace

VerifyReport check_ds_groupring(const FiniteGroupView& G, const std::vector<std::uint64_t>& D, unsigned threads) {
  return ds_groupring(G, D, threads, nullptr, {});
}

VerifyReport check_pds_groupring(const FiniteGroupView& G, const std::vector<std::uint64_t>& D, unsigned threads) {
  return pds_groupring(G, D, threads, nullptr, {});
}

// ---- central sets -----------------------------------------------------------------------

ClassId inverse_class(const Group& G, ClassId c) {
  const Field& F = G.field();
  if (c.is_central()) return ClassId::central(F.neg(c.b()));
  const GroupElement rep{c.a, F.mul(F.j_of(c.a), F.embed(c.x()))};
  return G.class_of(G.inv(rep));
}

std::optional<CentralSet> central_set_of(const Group& G, const std::vector<GroupElement>& D) {
  CentralSet S(G.field_ptr());
  std::set<ClassId> seen;
  for (auto g : D) seen.insert(G.class_of(g));
  for (auto c : seen) S.insert(c);
  if (S.cardinality() != D.size()) return std::nullopt;
  std::vector<GroupElement> sorted = D;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return S;
}

namespace {

std::function<GroupRingVec()> suzuki_conv(const Group& G, const std::vector<GroupElement>& elems, unsigned threads) {
  return [&G, &elems, threads] { return convolve(G, elems, elems, threads); };
}

}  // namespace

VerifyReport check_ds(const VerifyContext& ctx, const CentralSet& S, Method method) {
  if (method == Method::Character) return ds_character(ctx, S);
  require_group(ctx);
  const Group& G = *ctx.group;
  if (!S.field().same_as(G.field())) throw Error(Errc::ContextMismatch, "set and group use different fields");
  const double k = static_cast<double>(S.cardinality());
  if (k * k > kConvolutionBudget) throw Error(Errc::TooLarge, "|S|^2 exceeds the convolution budget");
  const auto elems = S.elements(G);
  VerifyReport gr = ds_groupring(view_of(G), indices_of(G, elems), ctx.threads, &G, suzuki_conv(G, elems, ctx.threads));
  if (method == Method::GroupRing) return gr;
  return merge_both(std::move(gr), ds_character(ctx, S));
}

VerifyReport check_pds(const VerifyContext& ctx, const CentralSet& S, Method method) {
  if (method == Method::Character) return pds_character(ctx, S);
  require_group(ctx);
  const Group& G = *ctx.group;
  if (!S.field().same_as(G.field())) throw Error(Errc::ContextMismatch, "set and group use different fields");
  const double k = static_cast<double>(S.cardinality());
  if (k * k > kConvolutionBudget) throw Error(Errc::TooLarge, "|S|^2 exceeds the convolution budget");
  const auto elems = S.elements(G);
  VerifyReport gr = pds_groupring(view_of(G), indices_of(G, elems), ctx.threads, &G, suzuki_conv(G, elems, ctx.threads));
  if (method == Method::GroupRing) return gr;
  return merge_both(std::move(gr), pds_character(ctx, S));
}

VerifyReport check_ds_elements(const VerifyContext& ctx, const std::vector<GroupElement>& D, Method method) {
  require_group(ctx);
  const Group& G = *ctx.group;
  if (method != Method::GroupRing) {
    auto S = central_set_of(G, D);
    if (!S) throw Error(Errc::NonCentralSetForCharacterMethod, "the set is not a union of conjugacy classes");
    return check_ds(ctx, *S, method);
  }
  const double k = static_cast<double>(D.size());
  if (k * k > kConvolutionBudget) throw Error(Errc::TooLarge, "|S|^2 exceeds the convolution budget");
  std::vector<GroupElement> sorted = D;
  std::sort(sorted.begin(), sorted.end());
  return ds_groupring(view_of(G), indices_of(G, sorted), ctx.threads, &G, suzuki_conv(G, sorted, ctx.threads));
}

// ---- linking -------------------------------------------------------------------------------

VerifyReport check_linking(const VerifyContext& ctx, const std::vector<CentralSet>& family,
                           const ThirdResolver& third, Method method) {
  const auto t0 = Clock::now();
  require_group(ctx);
  const Group& G = *ctx.group;
  if (family.empty()) throw Error(Errc::InvalidArgument, "empty linking family");
  VerifyReport r;
  r.check = "linking";
  r.method = method_name(method);
  const std::size_t l = family.size();
  for (const auto& S : family)
    if (!S.field().same_as(G.field())) throw Error(Errc::ContextMismatch, "set and group use different fields");
  for (const auto& S : family)
    if (S.cardinality() != family[0].cardinality())
      throw Error(Errc::ParameterMismatch, "linking-system members must have equal parameters");

  // members
  std::optional<DSParams> params;
  for (std::size_t i = 0; i < l; ++i) {
    VerifyReport m = check_ds(ctx, family[i], method);
    if (!m.result) r.add_witness("member", "member " + std::to_string(i) + " is not a difference set");
    for (auto& w : m.witnesses) r.add_witness(w.kind, "member " + std::to_string(i) + ": " + w.detail);
    if (m.ds) params = m.ds;
  }
  if (!params) {
    r.seconds = since(t0);
    return r;
  }
  r.ds = params;
  const auto candidates = linking_params_for(*params);
  if (candidates.empty()) {
    r.add_witness("parameter", "n = " + std::to_string(params->n) + " admits no integral eta = k(k +- sqrt n)/v");
    r.seconds = since(t0);
    return r;
  }
  if (l == 1) {
    r.degenerate = true;
    r.notes.push_back("family of size 1: pair conditions are vacuous");
    r.linking = candidates.front();
    r.linking->l = 1;
    r.result = r.witness_total == 0;
    r.seconds = since(t0);
    return r;
  }
  if (r.witness_total) {
    r.seconds = since(t0);
    return r;
  }

  // pairs and their third sets
  struct Pair {
    std::size_t i, j;
    std::optional<CentralSet> third;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (i != j) pairs.push_back({i, j, third ? third(i, j) : std::nullopt});
  const bool want_gr = method != Method::Character;
  const bool want_ch = method != Method::GroupRing;
  if (want_ch) {
    if (!ctx.table) throw Error(Errc::InvalidArgument, "the character method needs a character table");
    for (auto& p : pairs)
      if (!p.third) throw Error(Errc::InvalidArgument, "the character method needs the third set of every pair");
  }
  // thirds must themselves be difference sets with the same parameters
  std::set<std::size_t> checked_third;
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    if (!pairs[pi].third) continue;
    VerifyReport m = check_ds(ctx, *pairs[pi].third, method);
    if (!m.result || m.ds != params)
      r.add_witness("pair", "third set of (" + std::to_string(pairs[pi].i) + "," + std::to_string(pairs[pi].j) +
                                ") is not a difference set with the member parameters");
  }

  // group ring: P = D_i D_j^{(-1)} per pair, evaluated once
  std::vector<GroupRingVec> prod;
  std::vector<std::vector<GroupElement>> elems(l);
  if (want_gr) {
    for (std::size_t i = 0; i < l; ++i) elems[i] = family[i].elements(G);
    for (auto& p : pairs) prod.push_back(convolve(G, elems[p.i], elems[p.j], ctx.threads));
  }
  // character values, once per set
  std::vector<CharValues> cv_members, cv_third;
  if (want_ch) {
    for (const auto& S : family) cv_members.push_back(omega_all(*ctx.table, S, ctx.threads));
    for (auto& p : pairs) cv_third.push_back(omega_all(*ctx.table, *p.third, ctx.threads));
  }

  std::vector<std::vector<Witness>> per_candidate(candidates.size());
  std::optional<std::size_t> winner;
  for (std::size_t ci = 0; ci < candidates.size() && !winner; ++ci) {
    const LinkingParams& lp = candidates[ci];
    const std::int64_t coef = lp.mu - lp.eta;
    auto& wit = per_candidate[ci];
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const auto& p = pairs[pi];
      const std::string tag = "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
      if (want_gr) {
        const GroupRingVec& P = prod[pi];
        if (p.third) {
          for (std::uint64_t g = 0; g < G.order(); ++g) {
            const GroupElement x = G.element(g);
            const std::int64_t want = lp.eta + (p.third->contains(G.class_of(x)) ? coef : 0);
            if (P[g] != want) {
              wit.push_back({"pair", "groupring " + tag + " at " + describe(G, x) + ": coefficient " +
                                         std::to_string(P[g]) + ", expected " + std::to_string(want)});
              break;
            }
          }
        } else {
          // D_(i,j) is read off the product and must be a difference set
          std::vector<GroupElement> derived;
          bool shape = true;
          for (std::uint64_t g = 0; g < G.order() && shape; ++g) {
            if (P[g] == lp.mu) derived.push_back(G.element(g));
            else if (P[g] != lp.eta) shape = false;
          }
          if (!shape) {
            wit.push_back({"pair", "groupring " + tag + ": coefficients are not in {eta, mu}"});
          } else {
            VerifyContext c2 = ctx;
            const VerifyReport d = check_ds_elements(c2, derived, Method::GroupRing);
            if (!d.result || d.ds != params)
              wit.push_back({"pair", "groupring " + tag + ": derived third set is not a difference set"});
          }
        }
      }
      if (want_ch) {
        const CharacterTable& T = *ctx.table;
        for (std::uint64_t c = 1; c < T.count(); ++c) {
          const auto &wi = cv_members[p.i], &wj = cv_members[p.j], &wt = cv_third[pi];
          if (!wi.error[c].empty() || !wj.error[c].empty() || !wt.error[c].empty()) {
            wit.push_back({"character", tag + " " + describe(T.at(c)) + ": omega unavailable"});
            break;
          }
          const CycInt lhs = wi.omega[c] * wj.omega[c].conj();
          const CycInt rhs = wt.omega[c].scaled(coef);
          if (!(lhs == rhs)) {
            wit.push_back({"character", tag + " " + describe(T.at(c)) + ": omega(D_i) conj(omega(D_j)) = " +
                                            lhs.str() + ", (mu - eta) omega(D') = " + rhs.str()});
            break;
          }
        }
      }
    }
    if (wit.empty()) winner = ci;
  }
  r.checked = pairs.size();
  if (winner) {
    r.linking = candidates[*winner];
    r.linking->l = l;
    r.notes.push_back("eta = k(k " + std::string(candidates[*winner].mu < candidates[*winner].eta ? "+" : "-") +
                      " sqrt n)/v");
  } else {
    for (auto& w : per_candidate.front()) r.add_witness(w.kind, w.detail);
  }
  r.result = r.witness_total == 0 && winner.has_value();
  r.seconds = since(t0);
  return r;
}

VerifyReport check_linking(const VerifyContext& ctx, const LinkingFamily& family, Method method) {
  VerifyReport r = check_linking(
      ctx, family.sets, [&family](std::size_t i, std::size_t j) { return std::optional<CentralSet>(family.third(i, j)); },
      method);
  if (family.degenerate) r.degenerate = true;
  return r;
}

// ---- searches ---------------------------------------------------------------------------------

namespace {

enum class Kind { DS, PDS };

class Search {
 public:
  Search(const VerifyContext& ctx, Kind kind, std::int64_t k, std::int64_t n_or_delta, std::int64_t k_minus_mu)
      : ctx_(ctx), G_(*ctx.group), F_(G_.field()), kind_(kind), k_(k) {
    const CharacterTable* T = ctx.table;
    if (!T) throw Error(Errc::InvalidArgument, "the search needs a character table");
    q_ = F_.order();
    qe_ = F_.sub_order();
    gsize_ = static_cast<std::int64_t>(G_.generic_class_size());
    p_ = F_.p();
    N_ = T->root_order();
    if (kind == Kind::DS) {
      n_ = n_or_delta;
      if (is_square(n_)) roots_ = {isqrt(n_), -isqrt(n_)};
      use_linear_ = p_ == 2;
      impossible_ = p_ == 2 && !is_square(n_);
    } else {
      delta_ = n_or_delta;
      kmm_ = k_minus_mu;
      const std::int64_t disc = delta_ * delta_ + 4 * kmm_;
      if (is_square(disc) && (delta_ + isqrt(disc)) % 2 == 0) {
        const std::int64_t s = isqrt(disc);
        roots_ = {(delta_ + s) / 2, (delta_ - s) / 2};
        use_linear_ = true;
      } else {
        use_linear_ = false;
        impossible_ = p_ == 2;
      }
    }
    for (std::uint64_t i = 1; i < T->count(); ++i) {
      const CharId chi = T->at(i);
      if (T->is_linear(chi)) linear_.push_back(chi);
      else if (chi.family == CharFamily::F2NonLin || chi.family == CharFamily::EvenMid) central_only_.push_back(chi);
    }
    if (!use_linear_) linear_.clear();
    build_leaders();
    build_tables();
  }

  bool impossible() const noexcept { return impossible_; }

  // Central phase: all B, filtered by size, regularity and central-only characters.
  std::vector<Bits> central_candidates() const {
    std::vector<Bits> out;
    const std::uint64_t total = std::uint64_t{1} << q_;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Bits B(q_);
      for (std::uint32_t b = 0; b < q_; ++b)
        if ((mask >> b) & 1u) B.set(b);
      const auto nb = static_cast<std::int64_t>(B.count());
      const std::int64_t rem = k_ - nb;
      if (rem < 0 || rem % gsize_ != 0 || rem / gsize_ > static_cast<std::int64_t>((q_ - 1) * qe_)) continue;
      if (kind_ == Kind::PDS) {
        if (B.test(0)) continue;
        bool sym = true;
        for (std::uint32_t b = 0; b < q_ && sym; ++b)
          if (B.test(b) && !B.test(F_.neg(FieldElement{b}).index)) sym = false;
        if (!sym) continue;
      }
      CentralSet S(G_.field_ptr());
      S.set_B(B);
      bool ok = true;
      for (const auto& chi : central_only_) {
        if (!omega_ok(ctx_.table->omega(chi, S))) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(B));
    }
    return out;
  }

  void run(const Bits& B, std::vector<CentralSet>& found, SearchStats& stats) const {
    State st;
    st.B = &B;
    st.choice.assign(q_, 0);
    st.cur.assign(linear_.size() * N_, 0);
    for (std::size_t li = 0; li < linear_.size(); ++li)
      for (std::uint32_t b = 0; b < q_; ++b)
        if (B.test(b)) st.cur[li * N_ + central_exp_[li * q_ + b]] += 1;
    st.target = (k_ - static_cast<std::int64_t>(B.count())) / gsize_;
    st.count = 0;
    dfs(0, st, found, stats);
  }

 private:
  struct Option {
    std::uint32_t mask;
    std::uint32_t partner_mask;
    std::int64_t size;            // classes added, both a and its partner
    std::vector<std::int64_t> c;  // per linear character and exponent, times gsize
  };
  struct State {
    const Bits* B = nullptr;
    std::vector<std::uint32_t> choice;  // mask per a
    std::vector<std::int64_t> cur;
    std::int64_t target = 0, count = 0;
  };

  const VerifyContext& ctx_;
  const Group& G_;
  const Field& F_;
  Kind kind_;
  std::int64_t k_, n_ = 0, delta_ = 0, kmm_ = 0, gsize_ = 0;
  std::uint32_t q_ = 0, qe_ = 0, p_ = 0, N_ = 0;
  std::vector<std::int64_t> roots_;
  bool use_linear_ = false, impossible_ = false;
  std::vector<CharId> linear_, central_only_;
  std::vector<std::uint32_t> leaders_, partner_;  // partner_[a] = -a
  std::vector<std::vector<std::uint32_t>> invx_;  // x -> x' for the inverse class
  std::vector<std::uint32_t> central_exp_;
  std::vector<std::vector<Option>> options_;      // per leader position
  std::vector<std::vector<std::int64_t>> suffix_max_;  // per position, per char/exp
  std::vector<std::int64_t> suffix_classes_;

  bool omega_ok(const CycInt& w) const {
    if (kind_ == Kind::DS) {
      try {
        return w.norm_sq() == n_;
      } catch (const Error&) {
        return false;
      }
    }
    const CycInt lhs = w * w - w.scaled(delta_) - CycInt::integer(1, kmm_);
    return lhs.is_zero();
  }

  void build_leaders() {
    partner_.assign(q_, 0);
    invx_.assign(q_, {});
    for (std::uint32_t a = 1; a < q_; ++a) {
      partner_[a] = F_.neg(FieldElement{a}).index;
      invx_[a].resize(qe_);
      for (std::uint32_t x = 0; x < qe_; ++x) {
        const ClassId c = inverse_class(G_, ClassId::generic(FieldElement{a}, SubfieldElement{x}));
        invx_[a][x] = c.key;
      }
      if (kind_ == Kind::DS || partner_[a] >= a) leaders_.push_back(a);
    }
  }

  std::uint32_t map_mask(std::uint32_t a, std::uint32_t mask) const {
    std::uint32_t out = 0;
    for (std::uint32_t x = 0; x < qe_; ++x)
      if ((mask >> x) & 1u) out |= 1u << invx_[a][x];
    return out;
  }

  void build_tables() {
    const CharacterTable& T = *ctx_.table;
    const std::size_t L = linear_.size();
    central_exp_.assign(L * q_, 0);
    std::vector<std::uint32_t> gexp(L * q_ * qe_, 0);
    for (std::size_t li = 0; li < L; ++li) {
      for (std::uint32_t b = 0; b < q_; ++b)
        central_exp_[li * q_ + b] = T.value_monomial(linear_[li], ClassId::central(FieldElement{b})).exp;
      for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t x = 0; x < qe_; ++x)
          gexp[(li * q_ + a) * qe_ + x] =
              T.value_monomial(linear_[li], ClassId::generic(FieldElement{a}, SubfieldElement{x})).exp;
    }
    auto add_contrib = [&](std::vector<std::int64_t>& c, std::uint32_t a, std::uint32_t mask) {
      for (std::size_t li = 0; li < L; ++li)
        for (std::uint32_t x = 0; x < qe_; ++x)
          if ((mask >> x) & 1u) c[li * N_ + gexp[(li * q_ + a) * qe_ + x]] += gsize_;
    };
    const std::uint32_t full = (qe_ >= 32) ? ~0u : ((1u << qe_) - 1);
    for (std::uint32_t a : leaders_) {
      std::vector<Option> opts;
      const std::uint32_t pa = partner_[a];
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        Option o;
        o.mask = mask;
        o.partner_mask = 0;
        o.c.assign(L * N_, 0);
        if (kind_ == Kind::PDS) {
          const std::uint32_t pm = map_mask(a, mask);
          if (pa == a) {
            if (pm != mask) continue;
          } else {
            o.partner_mask = pm;
          }
        }
        o.size = std::popcount(mask) + (kind_ == Kind::PDS && pa != a ? std::popcount(o.partner_mask) : 0);
        add_contrib(o.c, a, mask);
        if (kind_ == Kind::PDS && pa != a) add_contrib(o.c, pa, o.partner_mask);
        opts.push_back(std::move(o));
      }
      options_.push_back(std::move(opts));
    }
    const std::size_t P = leaders_.size();
    suffix_max_.assign(P + 1, std::vector<std::int64_t>(L * N_, 0));
    suffix_classes_.assign(P + 1, 0);
    for (std::size_t i = P; i-- > 0;) {
      suffix_max_[i] = suffix_max_[i + 1];
      std::int64_t best = 0;
      std::vector<std::int64_t> mx(L * N_, 0);
      for (const auto& o : options_[i]) {
        best = std::max(best, o.size);
        for (std::size_t t = 0; t < mx.size(); ++t) mx[t] = std::max(mx[t], o.c[t]);
      }
      for (std::size_t t = 0; t < mx.size(); ++t) suffix_max_[i][t] += mx[t];
      suffix_classes_[i] = suffix_classes_[i + 1] + best;
    }
  }

  // Can the final omega of linear character li still hit an admissible value?
  bool linear_feasible(const std::vector<std::int64_t>& cur, std::size_t pos) const {
    const auto& rem = suffix_max_[pos];
    for (std::size_t li = 0; li < linear_.size(); ++li) {
      const std::int64_t* lo = &cur[li * N_];
      const std::int64_t* up = &rem[li * N_];
      auto in = [&](std::uint32_t e, std::int64_t v) { return v >= lo[e] && v <= lo[e] + up[e]; };
      bool any = false;
      for (std::int64_t r : roots_) {
        if (p_ == 2) {
          // omega = N_0 - N_h with N_0 + N_h = k
          const std::uint32_t h = N_ / 2;
          if ((k_ + r) % 2 != 0) continue;
          const std::int64_t n0 = (k_ + r) / 2;
          bool ok = in(0, n0) && in(h, k_ - n0);
          for (std::uint32_t e = 1; e < N_ && ok; ++e)
            if (e != h && !in(e, 0)) ok = false;
          if (ok) any = true;
        } else {
          // rational omega: N_1 = ... = N_{p-1} = c, omega = N_0 - c, N_0 + (p-1) c = k
          if ((k_ - r) % p_ != 0) continue;
          const std::int64_t c = (k_ - r) / p_;
          bool ok = in(0, r + c);
          for (std::uint32_t e = 1; e < N_ && ok; ++e)
            if (!in(e, c)) ok = false;
          if (ok) any = true;
        }
        if (any) break;
      }
      if (!any) return false;
    }
    return true;
  }

  void dfs(std::size_t pos, State& st, std::vector<CentralSet>& found, SearchStats& stats) const {
    ++stats.nodes;
    if (st.count > st.target || st.count + suffix_classes_[pos] < st.target) return;
    if (use_linear_ && !linear_feasible(st.cur, pos)) return;
    if (pos == leaders_.size()) {
      ++stats.leaves;
      CentralSet S(G_.field_ptr());
      S.set_B(*st.B);
      for (std::uint32_t a = 1; a < q_; ++a) {
        if (!st.choice[a]) continue;
        Bits g(qe_);
        for (std::uint32_t x = 0; x < qe_; ++x)
          if ((st.choice[a] >> x) & 1u) g.set(x);
        S.set_gamma(FieldElement{a}, g);
      }
      if (accept(S)) found.push_back(std::move(S));
      return;
    }
    const std::uint32_t a = leaders_[pos];
    for (const auto& o : options_[pos]) {
      st.choice[a] = o.mask;
      if (kind_ == Kind::PDS && partner_[a] != a) st.choice[partner_[a]] = o.partner_mask;
      st.count += o.size;
      for (std::size_t t = 0; t < o.c.size(); ++t) st.cur[t] += o.c[t];
      dfs(pos + 1, st, found, stats);
      for (std::size_t t = 0; t < o.c.size(); ++t) st.cur[t] -= o.c[t];
      st.count -= o.size;
    }
    st.choice[a] = 0;
    if (kind_ == Kind::PDS && partner_[a] != a) st.choice[partner_[a]] = 0;
  }

  bool accept(const CentralSet& S) const {
    VerifyContext c = ctx_;
    c.threads = 1;
    const Method m = ctx_.table->complete() ? Method::Character : Method::GroupRing;
    const VerifyReport r = kind_ == Kind::DS ? check_ds(c, S, m) : check_pds(c, S, m);
    if (!r.result) return false;
    if (kind_ == Kind::PDS && r.pds && (r.pds->lambda - r.pds->mu != delta_ || r.pds->k - r.pds->mu != kmm_)) return false;
    return true;
  }
};

SearchResult run_search(const VerifyContext& ctx, Kind kind, std::int64_t v, std::int64_t k, std::int64_t a1,
                        std::int64_t a2, bool feasible) {
  const auto t0 = Clock::now();
  require_group(ctx);
  const Group& G = *ctx.group;
  if (v != static_cast<std::int64_t>(G.order()))
    throw Error(Errc::ParameterMismatch, "v = " + std::to_string(v) + " but |G| = " + std::to_string(G.order()));
  if (G.class_count() > kMaxClassesPruned)
    throw Error(Errc::SearchSpaceTooLarge, std::to_string(G.class_count()) + " classes exceed the pruned-search limit of " +
                                               std::to_string(kMaxClassesPruned));
  SearchResult res;
  if (!feasible) {
    res.stats.parameters_feasible = false;
    res.seconds = since(t0);
    return res;
  }
  const Search search(ctx, kind, k, a1, a2);
  if (search.impossible()) {
    res.stats.parameters_feasible = false;
    res.seconds = since(t0);
    return res;
  }
  const auto cands = search.central_candidates();
  res.stats.central_candidates = cands.size();
  std::vector<std::vector<CentralSet>> found(cands.size());
  std::vector<SearchStats> stats(cands.size());
  parallel_for(cands.size(), ctx.threads, [&](std::uint64_t i, unsigned) { search.run(cands[i], found[i], stats[i]); });
  for (std::size_t i = 0; i < cands.size(); ++i) {
    res.stats.nodes += stats[i].nodes;
    res.stats.leaves += stats[i].leaves;
    for (auto& s : found[i]) res.sets.push_back(std::move(s));
  }
  std::sort(res.sets.begin(), res.sets.end());
  res.stats.found = res.sets.size();
  res.seconds = since(t0);
  return res;
}

}  // namespace

SearchResult search_central_ds(const VerifyContext& ctx, const DSParams& params) {
  const bool feasible = params.k >= 0 && params.k <= params.v && ds_params_consistent(params);
  return run_search(ctx, Kind::DS, params.v, params.k, params.n, 0, feasible);
}

SearchResult search_central_pds(const VerifyContext& ctx, const PDSParams& params) {
  const bool feasible = params.k >= 0 && params.k < params.v && pds_params_consistent(params);
  return run_search(ctx, Kind::PDS, params.v, params.k, params.lambda - params.mu, params.k - params.mu, feasible);
}

SearchResult brute_force_central(const VerifyContext& ctx, std::int64_t k,
                                 const std::function<bool(const CentralSet&)>& accept) {
  const auto t0 = Clock::now();
  require_group(ctx);
  const Group& G = *ctx.group;
  const std::uint64_t ncls = G.class_count();
  if (ncls > kMaxClassesUnpruned)
    throw Error(Errc::SearchSpaceTooLarge, std::to_string(ncls) + " classes exceed the unpruned-search limit of " +
                                               std::to_string(kMaxClassesUnpruned));
  std::vector<ClassId> cls(ncls);
  std::vector<std::int64_t> size(ncls), suffix(ncls + 1, 0);
  for (std::uint64_t i = 0; i < ncls; ++i) {
    cls[i] = G.class_at(i);
    size[i] = static_cast<std::int64_t>(G.class_size(cls[i]));
  }
  for (std::uint64_t i = ncls; i-- > 0;) suffix[i] = suffix[i + 1] + size[i];
  SearchResult res;
  CentralSet S(G.field_ptr());
  std::function<void(std::uint64_t, std::int64_t)> rec = [&](std::uint64_t i, std::int64_t have) {
    ++res.stats.nodes;
    if (have > k || have + suffix[i] < k) return;
    if (i == ncls) {
      ++res.stats.leaves;
      if (accept(S)) res.sets.push_back(S);
      return;
    }
    rec(i + 1, have);
    S.insert(cls[i]);
    rec(i + 1, have + size[i]);
    S.erase(cls[i]);
  };
  rec(0, 0);
  std::sort(res.sets.begin(), res.sets.end());
  res.stats.found = res.sets.size();
  res.seconds = since(t0);
  return res;
}

// ---- cross validation ---------------------------------------------------------------------

CrossValidation cross_validate_sets(const VerifyContext& ctx, const std::vector<CentralSet>& sets) {
  const auto t0 = Clock::now();
  require_group(ctx);
  CrossValidation cv;
  cv.report.check = "cross-validate";
  cv.report.method = "both";
  std::vector<std::string> mismatch(sets.size());
  std::vector<char> ds_true(sets.size(), 0), pds_true(sets.size(), 0);
  VerifyContext inner = ctx;
  inner.threads = 1;
  parallel_for(sets.size(), ctx.threads, [&](std::uint64_t i, unsigned) {
    const CentralSet& S = sets[i];
    const VerifyReport a = check_ds(inner, S, Method::GroupRing);
    const VerifyReport b = check_ds(inner, S, Method::Character);
    const VerifyReport c = check_pds(inner, S, Method::GroupRing);
    const VerifyReport d = check_pds(inner, S, Method::Character);
    std::string m;
    if (a.result != b.result || a.trivial != b.trivial || (a.result && a.ds != b.ds))
      m += std::string("ds: groupring ") + (a.result ? "pass" : "fail") + ", character " + (b.result ? "pass" : "fail");
    if (c.result != d.result || c.trivial != d.trivial ||
        (c.result && (c.pds != d.pds || c.latin_epsilon != d.latin_epsilon))) {
      if (!m.empty()) m += "; ";
      m += std::string("pds: groupring ") + (c.result ? "pass" : "fail") + ", character " + (d.result ? "pass" : "fail");
      if (c.pds && d.pds)
        m += " (lambda,mu) = (" + std::to_string(c.pds->lambda) + "," + std::to_string(c.pds->mu) + ") vs (" +
             std::to_string(d.pds->lambda) + "," + std::to_string(d.pds->mu) + ")";
    }
    mismatch[i] = m;
    ds_true[i] = a.result && b.result;
    pds_true[i] = c.result && d.result;
  });
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (mismatch[i].empty()) ++cv.agreements;
    else cv.report.add_witness("engine", "sample " + std::to_string(i) + " (k=" + std::to_string(sets[i].cardinality()) +
                                             "): " + mismatch[i]);
    cv.ds_true += ds_true[i];
    cv.pds_true += pds_true[i];
  }
  cv.report.checked = sets.size();
  cv.report.result = cv.agreements == sets.size();
  cv.report.seconds = since(t0);
  return cv;
}

CrossValidation cross_validate(const VerifyContext& ctx, std::uint64_t samples, std::uint64_t seed,
                               const std::vector<CentralSet>& extra) {
  require_group(ctx);
  const Group& G = *ctx.group;
  std::mt19937_64 rng(seed);
  std::vector<CentralSet> sets;
  const std::uint64_t ncls = G.class_count();
  for (std::uint64_t s = 0; s < samples; ++s) {
    CentralSet S(G.field_ptr());
    for (std::uint64_t c = 0; c < ncls; ++c)
      if (rng() & 1u) S.insert(G.class_at(c));
    sets.push_back(std::move(S));
  }
  for (const auto& S : extra) sets.push_back(S);
  CrossValidation cv = cross_validate_sets(ctx, sets);
  cv.report.notes.push_back("seed " + std::to_string(seed) + ", " + std::to_string(samples) + " random subsets, " +
                            std::to_string(extra.size()) + " supplied sets");
  return cv;
}

VerifyReport sampled_char_check(const CharacterTable& table, const CentralSet& S,
                                const std::vector<std::int64_t>& expected, std::uint64_t sample_size,
                                std::uint64_t seed, unsigned threads) {
  const auto t0 = Clock::now();
  if (!table.field().same_as(S.field())) throw Error(Errc::ContextMismatch, "set and table use different fields");
  VerifyReport r;
  r.check = "sampled-characters";
  r.method = "character";
  if (table.count() < 2) {
    r.result = true;
    return r;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> idx(sample_size);
  for (auto& i : idx) i = 1 + rng() % (table.count() - 1);  // index 0 is the trivial character
  std::vector<std::string> miss(sample_size);
  parallel_for(sample_size, threads, [&](std::uint64_t s, unsigned) {
    const CharId chi = table.at(idx[s]);
    try {
      const CycInt w = table.omega(chi, S);
      if (!w.is_integer()) miss[s] = describe(chi) + ": omega = " + w.str() + " is not a rational integer";
      else if (std::find(expected.begin(), expected.end(), w.as_integer()) == expected.end())
        miss[s] = describe(chi) + ": omega = " + std::to_string(w.as_integer()) + " is not an expected value";
    } catch (const Error& e) {
      miss[s] = describe(chi) + ": " + e.what();
    }
  });
  for (auto& m : miss)
    if (!m.empty()) r.add_witness("character", m);
  r.checked = sample_size;
  r.result = r.witness_total == 0;
  r.notes.push_back("seed " + std::to_string(seed));
  r.seconds = since(t0);
  return r;
}

VerifyReport sampled_regularity_check(const Group& G, const CentralSet& S, std::uint64_t samples,
                                      std::uint64_t seed, unsigned threads) {
  const auto t0 = Clock::now();
  VerifyReport r;
  r.check = "regularity";
  r.method = "classes";
  if (S.B().test(0)) r.add_witness("regularity", "identity lies in the set");
  const std::uint64_t ncls = G.class_count();
  const std::uint64_t n = samples ? samples : ncls;
  std::vector<std::uint64_t> idx(n);
  if (samples) {
    std::mt19937_64 rng(seed);
    for (auto& i : idx) i = rng() % ncls;
  } else {
    for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
  }
  std::vector<std::string> bad(n);
  parallel_for(n, threads, [&](std::uint64_t s, unsigned) {
    const ClassId c = G.class_at(idx[s]);
    const ClassId ci = inverse_class(G, c);
    if (S.contains(c) != S.contains(ci))
      bad[s] = "class " + describe(c) + (S.contains(c) ? " is in the set but its inverse " : " is not in the set but its inverse ") +
               describe(ci) + (S.contains(ci) ? " is" : " is not");
  });
  for (auto& b : bad)
    if (!b.empty()) r.add_witness("regularity", b);
  r.checked = n;
  r.result = r.witness_total == 0;
  if (samples) r.notes.push_back("seed " + std::to_string(seed));
  r.seconds = since(t0);
  return r;
}

std::uint64_t streamed_cardinality(const Group& G, const CentralSet& S) {
  std::uint64_t total = 0;
  S.for_each_class([&](ClassId c) { total += G.class_size(c); });
  return total;
}

}  // namespace suzuki
