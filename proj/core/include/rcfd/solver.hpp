#pragma once

#include <string>
#include <vector>

#include "rcfd/design.hpp"
#include "rcfd/plan.hpp"

namespace rcfd {

enum class Reason {
  OK,
  NotDivRow,        // q does not divide m
  NotDivCol,        // q does not divide n
  NotDivPower,      // q^k does not divide m*n
  Exception_2_2_2_n,  // k=q=2, min(m,n)=2, max(m,n) = 2 (mod 4)
  Exception_2_6_6_6,  // k=2, q=m=n=6
};

struct ExistenceVerdict {
  bool exists = false;
  Reason reason = Reason::OK;
  long long k = 0, m = 0, n = 0, q = 0;

  std::string describe() const;  // "yes" or "no: ..."
};

// Decides whether a regular m x n row-column factorial design q^k exists.
// For k=1 the condition is q|m and q|n; q=1 always exists; for k>=2 the
// divisibility conditions plus the two genuine exceptions apply. Symmetric
// in m and n.
ExistenceVerdict exists(long long k, long long m, long long n, long long q);

struct PrimeComponent {
  long long q_c = 0;  // p_c^{s_c}
  long long p_c = 0;
  int s_c = 0;
  int i_c = 0;      // largest t with q_c^t | m
  int j_c = 0;      // largest t with q_c^t | n
  int alpha_c = 0;  // v_p(m) - s_c*i_c, in [0, s_c)
  int beta_c = 0;   // v_p(n) - s_c*j_c, in [0, s_c)
};

struct ComponentDecomposition {
  std::vector<PrimeComponent> components;  // ascending p_c
  long long a1 = 1;  // part of m coprime to q
  long long a2 = 1;  // part of n coprime to q
};

ComponentDecomposition decompose(long long m, long long n, long long q);

// Options for resolving the one external base case (a pair of MOLS of order
// q = 2 mod 4, q >= 10): a user-supplied design file, a seed-cache override,
// and an opt-in search budget (both zero by default, so resolution without
// a seed fails honestly with KernelUnavailable instead of searching).
struct KernelOptions {
  std::string seed_file;
  std::string cache_dir_override;  // empty: RCFD_SEED_CACHE / default cache
  unsigned long long search_nodes = 0;
  double search_seconds = 0.0;
};

class NonExistent : public Error {
 public:
  explicit NonExistent(const ExistenceVerdict& v)
      : Error("no design of type I_" + std::to_string(v.k) + "(" +
              std::to_string(v.m) + "," + std::to_string(v.n) + ";" +
              std::to_string(v.q) + ") exists: " + v.describe()),
        verdict(v) {}
  ExistenceVerdict verdict;
};

struct GenerateResult {
  Design design;
  PlanNode plan;
};

// Builds a verified design of the requested type together with the plan
// that produced it, or throws NonExistent / KernelUnavailable. Every
// returned design has passed verify_design.
GenerateResult generate(int k, int m, int n, int q,
                        const KernelOptions& kernel = {});

// A pair of orthogonal Latin squares of order v as an I_2(v,v;v).
// Throws NoSuchPair for v in {2,6}.
GenerateResult mols_pair(int v, const KernelOptions& kernel = {});

// Executes a plan tree; generate() output satisfies
// replay(result.plan) == result.design.
Design replay(const PlanNode& plan, const KernelOptions& kernel = {});

}  // namespace rcfd
