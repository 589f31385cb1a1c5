#include "rcfd/solver.hpp"

#include <algorithm>

#include "rcfd/combinators.hpp"
#include "rcfd/gf.hpp"
#include "rcfd/io.hpp"
#include "rcfd/oracle.hpp"
#include "rcfd/polyfield.hpp"
#include "rcfd/seeds.hpp"
#include "rcfd/sudoku.hpp"

namespace rcfd {
namespace {

using namespace plan_ops;

// q^k when it stays <= limit, else 0.
long long pow_within(long long q, long long k, long long limit) {
  long long v = 1;
  for (long long i = 0; i < k; ++i) {
    if (v > limit / q) return 0;
    v *= q;
  }
  return v;
}

// ---- plan node helpers -------------------------------------------------

PlanNode n_trivial(long long k, long long m, long long n) {
  PlanNode p(kTrivial);
  p.arg("k", k).arg("m", m).arg("n", n);
  return p;
}

PlanNode n_cyclic(long long m, long long n, long long q) {
  PlanNode p(kCyclicRectangle);
  p.arg("m", m).arg("n", n).arg("q", q);
  return p;
}

PlanNode n_pp(long long q, long long row_exp, long long col_exp) {
  PlanNode p(kPrimePowerDesign);
  p.arg("q", q).arg("row_exp", row_exp).arg("col_exp", col_exp);
  return p;
}

PlanNode n_trunc(long long keep, PlanNode child) {
  PlanNode p(kTruncate);
  p.arg("keep", keep).child(std::move(child));
  return p;
}

PlanNode n_transpose(PlanNode child) {
  PlanNode p(kTranspose);
  p.child(std::move(child));
  return p;
}

PlanNode n_blowup(long long rows, long long cols, PlanNode child) {
  if (rows == 1 && cols == 1) return child;
  PlanNode p(kBlowup);
  p.arg("row_factor", rows).arg("col_factor", cols).child(std::move(child));
  return p;
}

PlanNode n_fold(const char* op, std::vector<PlanNode> children) {
  if (children.size() == 1) return std::move(children[0]);
  PlanNode p(op);
  p.children = std::move(children);
  return p;
}

PlanNode n_extend(long long b1, long long b2, PlanNode child) {
  PlanNode p(kExtendFactor);
  p.arg("b1", b1).arg("b2", b2).child(std::move(child));
  return p;
}

PlanNode n_seed(const std::string& source, const std::string& ref,
                const DesignParams& want) {
  PlanNode p(kSeed);
  p.arg("source", source);
  p.arg(source == "builtin" ? "name" : "path", ref);
  p.arg("k", want.k).arg("m", want.m).arg("n", want.n).arg("q", want.q);
  return p;
}

// ---- k = 2 construction plans ------------------------------------------

// I_2(2,4;2), the smallest two-level brick; the direct (1,1) shape over
// GF(2) does not exist, so it is cut down from the three-coordinate design.
PlanNode n_brick24() { return n_trunc(2, n_pp(2, 1, 2)); }

// I_2(v,v;v) for v = 1, odd v, or 4 | v: the Kronecker product of one
// square design per prime-power component of v.
PlanNode plan_pp_square(long long v) {
  if (v == 1) return n_trivial(2, 1, 1);
  std::vector<PlanNode> parts;
  long long rest = v;
  for (long long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    long long q_c = 1;
    while (rest % p == 0) {
      rest /= p;
      q_c *= p;
    }
    parts.push_back(n_pp(q_c, 1, 1));
  }
  return n_fold(kKronecker, std::move(parts));
}

// I_2(2l,2l;2) for odd l >= 3, patched from the embedded 6x6 seed and
// even-sided bricks.
PlanNode plan_square2(long long l) {
  const DesignParams s66{2, 6, 6, 2};
  if (l == 3) return n_seed("builtin", "S66", s66);
  const long long s = (l - 3) / 2;  // 2l = 6 + 4s
  PlanNode top_right = n_blowup(3, s, n_brick24());     // I_2(6,4s;2)
  PlanNode bottom_left = n_transpose(n_blowup(3, s, n_brick24()));
  PlanNode bottom_right = n_blowup(2 * s, s, n_brick24());  // I_2(4s,4s;2)
  std::vector<PlanNode> top;
  top.push_back(n_seed("builtin", "S66", s66));
  top.push_back(std::move(top_right));
  std::vector<PlanNode> bottom;
  bottom.push_back(std::move(bottom_left));
  bottom.push_back(std::move(bottom_right));
  std::vector<PlanNode> rows;
  rows.push_back(n_fold(kGlueCols, std::move(top)));
  rows.push_back(n_fold(kGlueCols, std::move(bottom)));
  return n_fold(kGlueRows, std::move(rows));
}

// I_2(2*l1, 2*l2; 2); assumes the existence check has passed, so l1 and l2
// are never both odd with min < 3.
PlanNode plan_k2_q2(long long l1, long long l2) {
  if (l2 % 2 == 0) return n_blowup(l1, l2 / 2, n_brick24());
  if (l1 % 2 == 0) return n_transpose(plan_k2_q2(l2, l1));
  if (l1 < 3 || l2 < l1) {
    throw InternalAssertion("two-level construction reached an excluded shape");
  }
  PlanNode square = plan_square2(l1);
  if (l2 == l1) return square;
  std::vector<PlanNode> parts;
  parts.push_back(std::move(square));
  parts.push_back(n_blowup(l1, (l2 - l1) / 2, n_brick24()));
  return n_fold(kGlueCols, std::move(parts));
}

// I_2(6*l1, 6*l2; 6) for l1 <= l2, (l1,l2) != (1,1): l1 stacked copies of a
// strip of 6x12 and 6x18 blocks with widths 12a + 18b = 6*l2, b = l2 mod 2.
PlanNode plan_k2_q6(long long l1, long long l2) {
  std::vector<PlanNode> b12_parts;
  b12_parts.push_back(n_brick24());
  b12_parts.push_back(n_pp(3, 1, 1));

  const long long b = l2 % 2;
  const long long a = (l2 - 3 * b) / 2;
  if (a < 0) {
    throw InternalAssertion("six-level construction reached an excluded shape");
  }
  std::vector<PlanNode> strip;
  for (long long i = 0; i < a; ++i) {
    std::vector<PlanNode> copy = b12_parts;
    strip.push_back(n_fold(kKronecker, std::move(copy)));
  }
  for (long long i = 0; i < b; ++i) {
    strip.push_back(n_seed("builtin", "B18", DesignParams{2, 6, 18, 6}));
  }
  PlanNode one = n_fold(kGlueCols, std::move(strip));
  std::vector<PlanNode> stacked;
  for (long long i = 0; i < l1; ++i) stacked.push_back(one);
  return n_fold(kGlueRows, std::move(stacked));
}

PlanNode kernel_plan(long long v, const KernelOptions& kernel);

// I_2(q*l1, q*l2; q) for q = 2 (mod 4), q >= 10.
PlanNode plan_k2_qmod2(long long q, long long l1, long long l2,
                       const KernelOptions& kernel) {
  const long long r = q / 2;  // odd, >= 5
  auto even_piece = [&](long long rows_l, long long half_cols) {
    std::vector<PlanNode> parts;
    parts.push_back(n_brick24());
    parts.push_back(plan_pp_square(r));
    return n_blowup(rows_l, half_cols, n_fold(kKronecker, std::move(parts)));
  };
  if (l2 % 2 == 0) return even_piece(l1, l2 / 2);
  if (l1 % 2 == 0) return n_transpose(plan_k2_qmod2(q, l2, l1, kernel));
  if (l2 < l1) {
    throw InternalAssertion("mod-4 construction reached an unordered shape");
  }
  PlanNode core;
  if (l1 == 1) {
    core = kernel_plan(q, kernel);
  } else {
    std::vector<PlanNode> parts;
    parts.push_back(plan_square2(l1));
    parts.push_back(plan_pp_square(r));
    core = n_fold(kKronecker, std::move(parts));
  }
  if (l2 == l1) return core;
  std::vector<PlanNode> parts;
  parts.push_back(std::move(core));
  parts.push_back(even_piece(l1, (l2 - l1) / 2));
  return n_fold(kGlueCols, std::move(parts));
}

PlanNode plan_k2(long long q, long long l1, long long l2,
                 const KernelOptions& kernel) {
  if (q % 2 == 1 || q % 4 == 0) {
    return n_blowup(l1, l2, plan_pp_square(q));
  }
  if (q == 2) return plan_k2_q2(l1, l2);
  if (q == 6) return plan_k2_q6(l1, l2);
  return plan_k2_qmod2(q, l1, l2, kernel);
}

// ---- k >= 3 construction plans -----------------------------------------

PlanNode plan_k3plus(long long k, long long m, long long n, long long q) {
  const long long mn = m * n;
  long long kstar = 0;
  while (true) {
    const long long pw = pow_within(q, kstar + 1, mn);
    if (pw == 0 || mn % pw != 0) break;
    ++kstar;
  }
  if (k > kstar) {
    throw InternalAssertion("existence predicate admitted an infeasible k");
  }

  const ComponentDecomposition dec = decompose(m, n, q);
  std::vector<PlanNode> parts;
  long long min_kc = -1;
  for (const PrimeComponent& c : dec.components) {
    const bool extend = c.alpha_c + c.beta_c >= c.s_c;
    const long long kc = c.i_c + c.j_c + (extend ? 1 : 0);
    min_kc = min_kc < 0 ? kc : std::min(min_kc, kc);

    long long pa = 1, pb = 1;
    for (int t = 0; t < c.alpha_c; ++t) pa *= c.p_c;
    for (int t = 0; t < c.beta_c; ++t) pb *= c.p_c;

    PlanNode node = n_pp(c.q_c, c.i_c, c.j_c);
    if (extend) {
      node = n_extend(pa, pb, std::move(node));
    } else {
      if (c.i_c == 1 && c.j_c == 1 && c.q_c == 2) {
        // would need the nonexistent I_2(2,2;2); impossible while k >= 3
        throw InternalAssertion("binary component degenerated at k >= 3");
      }
      node = n_blowup(pa, pb, std::move(node));
    }
    if (kc > kstar) node = n_trunc(kstar, std::move(node));
    parts.push_back(std::move(node));
  }
  if (min_kc != kstar) {
    throw InternalAssertion("component coordinate budgets disagree with q^k | mn");
  }

  PlanNode tree = n_fold(kKronecker, std::move(parts));
  tree = n_blowup(dec.a1, dec.a2, std::move(tree));
  if (k < kstar) tree = n_trunc(k, std::move(tree));
  return tree;
}

// ---- kernel resolution ---------------------------------------------------

PlanNode kernel_plan(long long v, const KernelOptions& kernel) {
  const DesignParams want{2, static_cast<int>(v), static_cast<int>(v),
                          static_cast<int>(v)};
  if (const char* name = builtin_seed_name_for(want)) {
    return n_seed("builtin", name, want);
  }
  const std::string dir = kernel.cache_dir_override.empty()
                              ? default_seed_cache_dir()
                              : kernel.cache_dir_override;
  if (load_cached_seed(want, dir)) {
    const std::string path =
        dir + "/" + seed_cache_filename(want);
    return n_seed("cache", path, want);
  }
  if (!kernel.seed_file.empty()) {
    Design d = read_design_file(kernel.seed_file);
    if (d.params != want) {
      throw ShapeMismatch("seed file holds " + d.params.str() + ", expected " +
                          want.str());
    }
    if (!is_verified(d)) {
      throw UnverifiedInput("seed file design does not verify");
    }
    return n_seed("file", kernel.seed_file, want);
  }
  if (kernel.search_nodes > 0 || kernel.search_seconds > 0) {
    Budget budget;
    budget.max_nodes = kernel.search_nodes > 0
                           ? kernel.search_nodes
                           : 1'000'000'000'000ULL;
    budget.max_seconds =
        kernel.search_seconds > 0 ? kernel.search_seconds : 1e18;
    SearchOutcome out = search_mols_pair(static_cast<int>(v), budget);
    if (out.status == SearchStatus::Found) {
      if (!dir.empty()) {
        const std::string path = store_seed(*out.design, dir);
        return n_seed("cache", path, want);
      }
      PlanNode p(kSearchKernel);
      p.arg("v", v).arg("max_nodes", static_cast<long long>(budget.max_nodes));
      return p;
    }
  }
  throw KernelUnavailable(
      "no pair of orthogonal Latin squares of order " + std::to_string(v) +
      " is available (no builtin seed, cache entry, seed file or search hit)");
}

}  // namespace

std::string ExistenceVerdict::describe() const {
  switch (reason) {
    case Reason::OK:
      return "yes";
    case Reason::NotDivRow:
      return "no: q does not divide m";
    case Reason::NotDivCol:
      return "no: q does not divide n";
    case Reason::NotDivPower:
      return "no: q^k does not divide m*n";
    case Reason::Exception_2_2_2_n:
    case Reason::Exception_2_6_6_6:
      return "no: exception (k,q,m,n)=(" + std::to_string(k) + "," +
             std::to_string(q) + "," + std::to_string(m) + "," +
             std::to_string(n) + ")";
  }
  return "no";
}

ExistenceVerdict exists(long long k, long long m, long long n, long long q) {
  if (k < 1 || m < 1 || n < 1 || q < 1) {
    throw RangeError("parameters must be positive");
  }
  ExistenceVerdict v{true, Reason::OK, k, m, n, q};
  auto fail = [&v](Reason r) {
    v.exists = false;
    v.reason = r;
    return v;
  };
  if (q == 1) return v;
  if (m % q != 0) return fail(Reason::NotDivRow);
  if (n % q != 0) return fail(Reason::NotDivCol);
  if (k >= 2) {
    const long long mn = m * n;
    const long long qk = pow_within(q, k, mn);
    if (qk == 0 || mn % qk != 0) return fail(Reason::NotDivPower);
    const long long lo = std::min(m, n), hi = std::max(m, n);
    if (k == 2 && q == 2 && lo == 2 && hi % 4 == 2) {
      return fail(Reason::Exception_2_2_2_n);
    }
    if (k == 2 && q == 6 && lo == 6 && hi == 6) {
      return fail(Reason::Exception_2_6_6_6);
    }
  }
  return v;
}

ComponentDecomposition decompose(long long m, long long n, long long q) {
  if (q < 2) throw RangeError("decomposition needs q >= 2");
  if (m < 1 || n < 1) throw RangeError("parameters must be positive");
  ComponentDecomposition out;
  out.a1 = m;
  out.a2 = n;
  long long rest = q;
  for (long long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    PrimeComponent c;
    c.p_c = p;
    c.s_c = 0;
    c.q_c = 1;
    while (rest % p == 0) {
      rest /= p;
      ++c.s_c;
      c.q_c *= p;
    }
    int vm = 0, vn = 0;
    for (long long t = m; t % p == 0; t /= p) ++vm;
    for (long long t = n; t % p == 0; t /= p) ++vn;
    c.i_c = vm / c.s_c;
    c.j_c = vn / c.s_c;
    c.alpha_c = vm % c.s_c;
    c.beta_c = vn % c.s_c;
    for (int t = 0; t < vm; ++t) out.a1 /= p;
    for (int t = 0; t < vn; ++t) out.a2 /= p;
    out.components.push_back(c);
  }
  return out;
}

Design replay(const PlanNode& plan, const KernelOptions& kernel) {
  const std::string& op = plan.op;
  auto child = [&](size_t i) { return replay(plan.children.at(i), kernel); };

  if (op == kTrivial) {
    return trivial_design(static_cast<int>(plan.iarg("k")),
                          static_cast<int>(plan.iarg("m")),
                          static_cast<int>(plan.iarg("n")));
  }
  if (op == kCyclicRectangle) {
    const int m = static_cast<int>(plan.iarg("m"));
    const int n = static_cast<int>(plan.iarg("n"));
    const int q = static_cast<int>(plan.iarg("q"));
    Design d = Design::filled({1, m, n, q});
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        d.set(i, j, 0, static_cast<Symbol>(((i % q) + (j % q)) % q));
      }
    }
    return d;
  }
  if (op == kPrimePowerDesign) {
    return prime_power_design(static_cast<int>(plan.iarg("q")),
                              static_cast<int>(plan.iarg("row_exp")),
                              static_cast<int>(plan.iarg("col_exp")));
  }
  if (op == kTruncate) return truncate(child(0), static_cast<int>(plan.iarg("keep")));
  if (op == kTranspose) return transpose(child(0));
  if (op == kBlowup) {
    return blowup(child(0), static_cast<int>(plan.iarg("row_factor")),
                  static_cast<int>(plan.iarg("col_factor")));
  }
  if (op == kKronecker || op == kGlueCols || op == kGlueRows) {
    if (plan.children.empty()) {
      throw InternalAssertion("fold node without children");
    }
    Design acc = child(0);
    for (size_t i = 1; i < plan.children.size(); ++i) {
      const Design next = child(i);
      if (op == kKronecker) acc = kronecker(acc, next);
      else if (op == kGlueCols) acc = glue_cols(acc, next);
      else acc = glue_rows(acc, next);
    }
    return acc;
  }
  if (op == kExtendFactor) {
    return extend_by_one_factor(child(0), static_cast<int>(plan.iarg("b1")),
                                static_cast<int>(plan.iarg("b2")));
  }
  if (op == kSeed) {
    const DesignParams want{
        static_cast<int>(plan.iarg("k")), static_cast<int>(plan.iarg("m")),
        static_cast<int>(plan.iarg("n")), static_cast<int>(plan.iarg("q"))};
    const std::string source = plan.sarg("source");
    Design d = source == "builtin" ? builtin_seed(plan.sarg("name"))
                                   : read_design_file(plan.sarg("path"));
    if (d.params != want) {
      throw UnverifiedInput("seed '" + (source == "builtin"
                                            ? plan.sarg("name")
                                            : plan.sarg("path")) +
                            "' holds " + d.params.str() + ", expected " +
                            want.str());
    }
    if (!is_verified(d)) {
      throw UnverifiedInput("seed design does not verify");
    }
    return d;
  }
  if (op == kSearchKernel) {
    Budget budget;
    budget.max_nodes = static_cast<unsigned long long>(plan.iarg("max_nodes"));
    budget.max_seconds = 1e18;
    SearchOutcome out = search_mols_pair(static_cast<int>(plan.iarg("v")), budget);
    if (out.status != SearchStatus::Found) {
      throw KernelUnavailable("kernel search did not reproduce a design");
    }
    return std::move(*out.design);
  }
  throw InternalAssertion("unknown plan operation '" + op + "'");
}

GenerateResult generate(int k, int m, int n, int q, const KernelOptions& kernel) {
  const ExistenceVerdict verdict = exists(k, m, n, q);
  if (!verdict.exists) throw NonExistent(verdict);

  PlanNode plan;
  if (q == 1) {
    plan = n_trivial(k, m, n);
  } else if (k == 1) {
    plan = n_cyclic(m, n, q);
  } else if (k == 2) {
    plan = m <= n ? plan_k2(q, m / q, n / q, kernel)
                  : n_transpose(plan_k2(q, n / q, m / q, kernel));
  } else {
    plan = plan_k3plus(k, m, n, q);
  }

  Design design = replay(plan, kernel);
  if (design.params != DesignParams{k, m, n, q}) {
    throw InternalAssertion("construction produced " + design.params.str() +
                            " instead of the requested type");
  }
  if (!is_verified(design)) {
    throw InternalAssertion("construction produced a non-verifying design for " +
                            design.params.str());
  }
  return {std::move(design), std::move(plan)};
}

GenerateResult mols_pair(int v, const KernelOptions& kernel) {
  if (v < 1) throw RangeError("order must be positive");
  if (v == 2 || v == 6) {
    throw NoSuchPair("no pair of orthogonal Latin squares of order " +
                     std::to_string(v) + " exists");
  }
  PlanNode plan;
  if (v == 1) {
    plan = n_trivial(2, 1, 1);
  } else if (v % 2 == 1 || v % 4 == 0) {
    plan = plan_pp_square(v);
  } else {
    plan = kernel_plan(v, kernel);
  }
  Design design = replay(plan, kernel);
  if (design.params != DesignParams{2, v, v, v} || !is_verified(design)) {
    throw InternalAssertion("square pair construction failed verification");
  }
  return {std::move(design), std::move(plan)};
}

}  // namespace rcfd
