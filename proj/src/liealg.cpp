#include "prolong/liealg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "prolong/errors.hpp"

namespace prolong {

namespace {

EpsVec unit(int dim, int i, long long v) {
  EpsVec e(dim, 0);
  e[i] = v;
  return e;
}

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::D: return "D";
  }
  return "?";
}

} // namespace

long long dot4(const EpsVec& a, const EpsVec& b) {
  check_internal(a.size() == b.size(), "dot4: dimension mismatch");
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

EpsVec eps_add(const EpsVec& a, const EpsVec& b) {
  EpsVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

EpsVec eps_sub(const EpsVec& a, const EpsVec& b) {
  EpsVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

EpsVec eps_scaled(const EpsVec& a, long long s) {
  EpsVec r = a;
  for (auto& x : r) x *= s;
  return r;
}

RootData build_root_system_any(Series s, int rank) {
  require(rank >= 1, "rank must be positive");
  if (s == Series::D) require(rank >= 2, "series D needs rank >= 2");

  RootData rd;
  rd.series = s;
  rd.rank = rank;
  rd.eps_dim = (s == Series::A) ? rank + 1 : rank;
  const int d = rd.eps_dim;

  // Simple roots (doubled).
  if (s == Series::A) {
    for (int i = 0; i < rank; ++i)
      rd.simple_roots.push_back(eps_sub(unit(d, i, 2), unit(d, i + 1, 2)));
  } else if (s == Series::B) {
    for (int i = 0; i + 1 < rank; ++i)
      rd.simple_roots.push_back(eps_sub(unit(d, i, 2), unit(d, i + 1, 2)));
    rd.simple_roots.push_back(unit(d, rank - 1, 2));
  } else {
    for (int i = 0; i + 1 < rank; ++i)
      rd.simple_roots.push_back(eps_sub(unit(d, i, 2), unit(d, i + 1, 2)));
    rd.simple_roots.push_back(eps_add(unit(d, rank - 2, 2), unit(d, rank - 1, 2)));
  }

  // Positive roots (doubled).
  if (s == Series::A) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        rd.positive_roots.push_back(eps_sub(unit(d, i, 2), unit(d, j, 2)));
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        rd.positive_roots.push_back(eps_sub(unit(d, i, 2), unit(d, j, 2)));
        rd.positive_roots.push_back(eps_add(unit(d, i, 2), unit(d, j, 2)));
      }
    if (s == Series::B)
      for (int i = 0; i < d; ++i) rd.positive_roots.push_back(unit(d, i, 2));
  }

  // Fundamental weights (doubled).
  auto ones_prefix = [&](int k) {  // e_0 + ... + e_k, doubled
    EpsVec v(d, 0);
    for (int i = 0; i <= k; ++i) v[i] = 2;
    return v;
  };
  if (s == Series::A) {
    for (int i = 0; i < rank; ++i) rd.fundamental_weights.push_back(ones_prefix(i));
  } else if (s == Series::B) {
    for (int i = 0; i + 1 < rank; ++i) rd.fundamental_weights.push_back(ones_prefix(i));
    rd.fundamental_weights.push_back(EpsVec(d, 1));  // half-sum of all e_i
  } else {
    for (int i = 0; i + 2 < rank; ++i) rd.fundamental_weights.push_back(ones_prefix(i));
    EpsVec spin_minus(d, 1), spin_plus(d, 1);
    spin_minus[d - 1] = -1;
    rd.fundamental_weights.push_back(spin_minus);
    rd.fundamental_weights.push_back(spin_plus);
  }

  rd.rho = EpsVec(d, 0);
  for (const auto& w : rd.fundamental_weights) rd.rho = eps_add(rd.rho, w);

  rd.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      long long num = 2 * dot4(rd.simple_roots[i], rd.simple_roots[j]);
      long long den = dot4(rd.simple_roots[i], rd.simple_roots[i]);
      check_internal(num % den == 0, "cartan entry not integral");
      rd.cartan[i][j] = int(num / den);
    }

  // Gram matrix of the fundamental weights.  The A-series lift carries a
  // component along (1,...,1) that is projected off first.
  rd.symmetric_form = QMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat g = Rat(long(dot4(rd.fundamental_weights[i], rd.fundamental_weights[j]))) / 4;
      if (s == Series::A) {
        long long si = 0, sj = 0;
        for (long long x : rd.fundamental_weights[i]) si += x;
        for (long long x : rd.fundamental_weights[j]) sj += x;
        g -= Rat(long(si * sj)) / (4 * d);
      }
      g.canonicalize();
      rd.symmetric_form.at(i, j) = g;
    }

  return rd;
}

RootData build_root_system(Series s, int rank) {
  if (s == Series::B) require(rank >= 2, "series B needs rank >= 2");
  if (s == Series::D) require(rank >= 3, "series D needs rank >= 3");
  return build_root_system_any(s, rank);
}

long long pairing(const RootData& rd, const EpsVec& mu, int i) {
  const EpsVec& a = rd.simple_roots[i];
  long long num = 2 * dot4(mu, a);
  long long den = dot4(a, a);
  check_internal(num % den == 0, "pairing not integral");
  return num / den;
}

EpsVec labels_to_eps(const RootData& rd, const Labels& la) {
  require(int(la.size()) == rd.rank, "label vector has wrong length (expected " +
                                         std::to_string(rd.rank) + ")");
  EpsVec mu(rd.eps_dim, 0);
  for (int i = 0; i < rd.rank; ++i)
    mu = eps_add(mu, eps_scaled(rd.fundamental_weights[i], la[i]));
  return mu;
}

Labels eps_to_labels(const RootData& rd, const EpsVec& mu) {
  Labels la(rd.rank);
  for (int i = 0; i < rd.rank; ++i) {
    long long p = pairing(rd, mu, i);
    check_internal(p <= INT32_MAX && p >= INT32_MIN, "label overflow");
    la[i] = int(p);
  }
  return la;
}

Int weyl_dimension_over_roots(const std::vector<EpsVec>& positive,
                              const EpsVec& rho, const EpsVec& mu) {
  Rat dim = 1;
  EpsVec top = eps_add(mu, rho);
  for (const auto& a : positive) {
    long long num = dot4(top, a);
    long long den = dot4(rho, a);
    check_internal(den > 0, "weyl_dimension: rho not strictly dominant");
    dim *= Rat(long(num), long(den));
  }
  dim.canonicalize();
  check_internal(dim.get_den() == 1, "weyl_dimension: non-integral result");
  return dim.get_num();
}

Int weyl_dimension(const RootData& rd, const Labels& highest) {
  for (int m : highest)
    require(m >= 0, "highest weight labels must be non-negative");
  return weyl_dimension_over_roots(rd.positive_roots, rd.rho,
                                   labels_to_eps(rd, highest));
}

namespace {

struct WeightGen {
  const RootData& rd;
  std::map<EpsVec, int> index;             // eps -> position in list
  std::vector<EpsVec> list;                // generation order = by height
  std::vector<std::vector<int>> depth;     // simple-root coefficients from the top
  std::vector<int> height;

  explicit WeightGen(const RootData& r) : rd(r) {}

  void generate(const EpsVec& top) {
    index[top] = 0;
    list.push_back(top);
    depth.push_back(std::vector<int>(rd.rank, 0));
    height.push_back(0);
    size_t next = 0;
    while (next < list.size()) {
      size_t begin = next, end = list.size();
      next = end;
      for (size_t w = begin; w < end; ++w) {
        EpsVec mu = list[w];
        for (int i = 0; i < rd.rank; ++i) {
          EpsVec down = eps_sub(mu, rd.simple_roots[i]);
          if (index.count(down)) continue;
          // length of the string already walked upward from mu
          int p = 0;
          EpsVec up = eps_add(mu, rd.simple_roots[i]);
          while (index.count(up)) {
            ++p;
            up = eps_add(up, rd.simple_roots[i]);
          }
          if (p + pairing(rd, mu, i) < 1) continue;
          index[down] = int(list.size());
          list.push_back(down);
          auto dv = depth[w];
          ++dv[i];
          depth.push_back(dv);
          height.push_back(height[w] + 1);
        }
      }
    }
  }
};

} // namespace

WeightMultiplicityTable weight_multiplicities(const RootData& rd, const Labels& highest,
                                              const Int& cap) {
  Int dim = weyl_dimension(rd, highest);
  if (dim > cap)
    throw resource_error("module dimension " + to_string(dim) + " exceeds cap " +
                         to_string(cap) + " for " + series_name(rd.series) +
                         std::to_string(rd.rank));

  WeightGen gen(rd);
  EpsVec top = labels_to_eps(rd, highest);
  gen.generate(top);

  // Freudenthal on dominant weights, in order of increasing height.
  EpsVec top_rho = eps_add(top, rd.rho);
  const long long top_norm = dot4(top_rho, top_rho);
  std::map<EpsVec, Int> dominant_mult;

  auto reflect_to_dominant = [&](EpsVec nu) {
    while (true) {
      int neg = -1;
      long long p = 0;
      for (int i = 0; i < rd.rank; ++i) {
        p = pairing(rd, nu, i);
        if (p < 0) { neg = i; break; }
      }
      if (neg < 0) return nu;
      nu = eps_sub(nu, eps_scaled(rd.simple_roots[neg], p));
    }
  };

  auto mult_of = [&](const EpsVec& nu) -> Int {
    auto it = dominant_mult.find(reflect_to_dominant(nu));
    check_internal(it != dominant_mult.end(), "Freudenthal: multiplicity not yet known");
    return it->second;
  };

  for (size_t w = 0; w < gen.list.size(); ++w) {
    const EpsVec& mu = gen.list[w];
    bool dominant = true;
    for (int i = 0; i < rd.rank && dominant; ++i)
      if (pairing(rd, mu, i) < 0) dominant = false;
    if (!dominant) continue;
    if (w == 0) {
      dominant_mult[mu] = 1;
      continue;
    }
    EpsVec mu_rho = eps_add(mu, rd.rho);
    long long denom = top_norm - dot4(mu_rho, mu_rho);
    check_internal(denom > 0, "Freudenthal: vanishing denominator below the top");
    Int num = 0;
    for (const auto& a : rd.positive_roots) {
      EpsVec nu = eps_add(mu, a);
      while (gen.index.count(nu)) {
        num += mult_of(nu) * Int(long(2 * dot4(nu, a)));
        nu = eps_add(nu, a);
      }
    }
    check_internal(num % Int(long(denom)) == 0, "Freudenthal: non-integral multiplicity");
    dominant_mult[mu] = num / Int(long(denom));
  }

  WeightMultiplicityTable table;
  table.highest = highest;
  table.dimension = 0;
  std::vector<size_t> order(gen.list.size());
  std::iota(order.begin(), order.end(), size_t(0));
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (gen.height[a] != gen.height[b]) return gen.height[a] < gen.height[b];
    return gen.depth[a] < gen.depth[b];
  });
  for (size_t w : order) {
    WeightEntry e;
    e.labels = eps_to_labels(rd, gen.list[w]);
    e.multiplicity = mult_of(gen.list[w]);
    e.depth = gen.depth[w];
    check_internal(e.multiplicity > 0, "weight with non-positive multiplicity");
    table.dimension += e.multiplicity;
    table.entries.push_back(std::move(e));
  }
  check_internal(table.dimension == dim,
                 "weight multiplicities do not sum to the Weyl dimension");
  return table;
}

} // namespace prolong
