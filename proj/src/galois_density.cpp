// Copyright 2026 The carlitz-jets Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carlitz/galois_density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "carlitz/binomials.hpp"
#include "carlitz/errors.hpp"
#include "json.hpp"

namespace carlitz {

namespace {

using KeySet = std::unordered_set<std::string>;

// Counts distinct keys over the units mod t^prec. Workers take disjoint
// prefix partitions and fill private sets, which are merged afterwards; the
// count does not depend on the worker count.
template <typename MakeKey>
std::uint64_t count_distinct(const FqSpec& spec, std::size_t prec,
                             const BruteOptions& opts, MakeKey make_key) {
  const std::uint64_t total = unit_count(spec.order(), prec);
  if (total > opts.budget)
    throw BudgetExceeded(std::to_string(total) + " units mod t^" +
                         std::to_string(prec) + " exceed the budget " +
                         std::to_string(opts.budget));
  const std::size_t workers = std::max<std::size_t>(1, opts.threads);
  std::vector<KeySet> sets(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto run = [&](std::size_t w) {
    try {
      std::string key;
      sets[w].reserve(static_cast<std::size_t>(total / workers + 1));
      for_each_unit(
          spec, prec,
          [&](std::span<const FqRaw> a) {
            make_key(a, key);
            sets[w].insert(key);
          },
          UnitPartition{w, workers}, opts.budget);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  KeySet& merged = sets[0];
  for (std::size_t w = 1; w < workers; ++w) {
    merged.merge(sets[w]);
    sets[w].clear();
  }
  return merged.size();
}

void append_raw(std::string& key, FqRaw v, bool wide) {
  key.push_back(static_cast<char>(v & 0xff));
  if (wide) key.push_back(static_cast<char>(v >> 8));
}

}  // namespace

// --- orders -----------------------------------------------------------------

std::string ImageOrder::to_decimal(unsigned q) const {
  using boost::multiprecision::cpp_int;
  const cpp_int v = cpp_int(unit) *
                    boost::multiprecision::pow(cpp_int(q),
                                               static_cast<unsigned>(exponent));
  return v.str();
}

ImageOrder as_image_order(std::uint64_t count, std::uint64_t unit, unsigned q) {
  if (unit == 0 || count % unit != 0)
    throw MalformedOrder(std::to_string(count) + " is not a multiple of " +
                         std::to_string(unit));
  std::uint64_t rest = count / unit;
  std::uint64_t e = 0;
  while (rest > 1) {
    if (rest % q != 0)
      throw MalformedOrder(std::to_string(count) + " is not " +
                           std::to_string(unit) + " * " + std::to_string(q) +
                           "^E");
    rest /= q;
    ++e;
  }
  if (rest != 1) throw MalformedOrder("zero image order");
  return {unit, e};
}

// --- prolongations ------------------------------------------------------------

JetMatrix galois_rep(const UnitClass& a, std::size_t k, std::size_t N) {
  if (N == 0) throw InsufficientPrecision("reduction level N must be >= 1");
  return jet(k, a.series(), N);
}

std::uint64_t image_order_brute(const FqSpecPtr& spec, std::size_t k,
                                std::size_t N, const BruteOptions& opts) {
  if (N == 0) throw InsufficientPrecision("reduction level N must be >= 1");
  const FqSpec& f = *spec;
  // Coefficient i of D^(j) a is C(i+j, j) a_{i+j}.
  std::vector<std::vector<FqRaw>> scale(k + 1, std::vector<FqRaw>(N));
  for (std::size_t j = 0; j <= k; ++j)
    for (std::size_t i = 0; i < N; ++i)
      scale[j][i] = f.from_int(binom_mod_p(i + j, j, f.p()));
  const bool wide = f.order() > 256;
  return count_distinct(
      f, N + k + opts.extra_precision, opts,
      [&](std::span<const FqRaw> a, std::string& key) {
        key.clear();
        for (std::size_t j = 0; j <= k; ++j)
          for (std::size_t i = 0; i < N; ++i)
            append_raw(key, f.mul(scale[j][i], a[i + j]), wide);
      });
}

std::vector<std::size_t> extra_indices(unsigned p, std::size_t k,
                                       std::size_t N) {
  std::vector<std::size_t> out;
  for (std::size_t l = N; l + 1 <= N + k; ++l) {
    for (std::size_t j = l - N + 1; j <= k; ++j) {
      if (binom_mod_p(l, j, p) != 0) {
        out.push_back(l);
        break;
      }
    }
  }
  return out;
}

ImageOrder image_order_formula(const FqSpec& spec, std::size_t k,
                               std::size_t N) {
  if (N == 0) throw InsufficientPrecision("reduction level N must be >= 1");
  return {spec.order() - 1, N - 1 + extra_indices(spec.p(), k, N).size()};
}

std::size_t torsion_level_m(unsigned p, std::size_t n, std::size_t k) {
  auto achieved = [&](std::size_t l) {
    const std::size_t lo = l > n ? l - n : 0;
    const std::size_t hi = std::min(k, l);
    for (std::size_t j = lo; j <= hi; ++j)
      if (binom_mod_p(l, j, p) != 0) return true;
    return false;
  };
  std::size_t m = 0;
  bool found = false;
  for (std::size_t l = 0; l <= n + k; ++l)
    if (achieved(l)) {
      m = l;
      found = true;
    }
  if (!found) throw SegmentViolation("no generator index is achieved");
  for (std::size_t l = 0; l <= m; ++l)
    if (!achieved(l))
      throw SegmentViolation("index " + std::to_string(l) +
                             " is skipped below m = " + std::to_string(m));
  if (m < n || m > n + k)
    throw SegmentViolation("m = " + std::to_string(m) + " outside [n, n+k]");
  return m;
}

// --- densities ----------------------------------------------------------------

Ratio DensityEstimate::rational_part() const {
  return {static_cast<std::int64_t>(exponent),
          static_cast<std::int64_t>(denominator)};
}

double DensityEstimate::value(unsigned q) const {
  const double unit_log =
      unit > 1 ? std::log(static_cast<double>(unit)) / std::log(static_cast<double>(q))
               : 0.0;
  return (static_cast<double>(exponent) + unit_log) /
         static_cast<double>(denominator);
}

DensityEstimate density_estimate(const ImageOrder& order, std::size_t N,
                                 std::size_t dim) {
  if (N == 0 || dim == 0)
    throw InvalidSpec("density needs N >= 1 and a positive dimension");
  return {order.exponent, order.unit, static_cast<std::uint64_t>(N * dim)};
}

DensityBounds density_bounds(std::size_t k, std::size_t N, unsigned q) {
  if (N == 0) throw InvalidSpec("density bounds need N >= 1");
  const auto den = static_cast<std::int64_t>(N * (k + 1));
  DensityBounds b;
  b.lower = {static_cast<std::int64_t>(N - 1), den};
  b.upper = {static_cast<std::int64_t>(N + k - 1), den};
  const double unit_log = q > 2 ? std::log(q - 1.0) / std::log(double(q)) : 0.0;
  b.lower_value = (static_cast<double>(b.lower.num) + unit_log) / den;
  b.upper_value = (static_cast<double>(b.upper.num) + unit_log) / den;
  return b;
}

// --- tensor powers ------------------------------------------------------------

PowerSplit split_power(std::uint64_t d, unsigned p) {
  if (d == 0) throw InvalidSpec("tensor exponent d must be >= 1");
  PowerSplit s;
  s.d_prime = d;
  while (s.d_prime % p == 0) {
    s.d_prime /= p;
    s.p_power *= p;
    ++s.e;
  }
  return s;
}

std::uint64_t tensor_unit_part(unsigned q, std::uint64_t d) {
  // p^e acts bijectively on F_q^x, so gcd(d', q-1) = gcd(d, q-1).
  const std::uint64_t qm1 = q - 1;
  return qm1 / std::gcd(d, qm1);
}

std::uint64_t tensor_image_order_brute(const FqSpecPtr& spec, std::uint64_t d,
                                       std::size_t N, const BruteOptions& opts) {
  if (N == 0) throw InsufficientPrecision("reduction level N must be >= 1");
  if (d == 0) throw InvalidSpec("tensor exponent d must be >= 1");
  const FqSpec& f = *spec;
  const bool wide = f.order() > 256;
  std::vector<FqRaw> result(N), base(N), tmp(N);
  auto mul_into = [&](std::vector<FqRaw>& x, const std::vector<FqRaw>& y) {
    std::fill(tmp.begin(), tmp.end(), 0);
    for (std::size_t i = 0; i < N; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; i + j < N; ++j)
        tmp[i + j] = f.add(tmp[i + j], f.mul(x[i], y[j]));
    }
    x.swap(tmp);
  };
  BruteOptions single = opts;
  // The power buffers are shared, so this enumeration runs on one worker.
  single.threads = 1;
  return count_distinct(
      f, N + opts.extra_precision, single,
      [&](std::span<const FqRaw> a, std::string& key) {
        std::fill(result.begin(), result.end(), 0);
        result[0] = 1;
        std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(N),
                  base.begin());
        for (std::uint64_t e = d; e; e >>= 1) {
          if (e & 1) mul_into(result, base);
          if (e > 1) mul_into(base, base);
        }
        key.clear();
        for (FqRaw c : result) append_raw(key, c, wide);
      });
}

ImageOrder tensor_image_order_formula(const FqSpec& spec, std::uint64_t d,
                                      std::size_t N) {
  if (N == 0) throw InsufficientPrecision("reduction level N must be >= 1");
  const PowerSplit s = split_power(d, spec.p());
  return {tensor_unit_part(spec.order(), d), (N - 1) / s.p_power};
}

// --- tables -------------------------------------------------------------------

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kBrute:
      return "brute";
    case Mode::kFormula:
      return "formula";
    case Mode::kBoth:
      return "both";
  }
  return "both";
}

Mode parse_mode(const std::string& text) {
  if (text == "brute") return Mode::kBrute;
  if (text == "formula") return Mode::kFormula;
  if (text == "both") return Mode::kBoth;
  throw ParseError("unknown mode '" + text + "'");
}

std::size_t DensityProblem::group_dim() const {
  return family == Family::kProlongation ? motivic_group_dim(parameter) : 1;
}

bool ImageTable::all_matched() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ImageRow& r) { return r.matched; });
}

std::optional<std::size_t> ImageTable::first_mismatch() const {
  for (const auto& r : rows)
    if (!r.matched) return r.N;
  return std::nullopt;
}

ImageTable density_table(const DensityProblem& problem) {
  if (!problem.spec) throw InvalidSpec("density problem without a field");
  if (problem.n_max == 0) throw InvalidSpec("N_max must be >= 1");
  const FqSpec& f = *problem.spec;
  const bool tensor = problem.family == Family::kTensorPower;
  const std::uint64_t unit =
      tensor ? tensor_unit_part(f.order(), problem.parameter) : f.order() - 1;

  ImageTable table{problem, {}};
  table.rows.reserve(problem.n_max);
  for (std::size_t N = 1; N <= problem.n_max; ++N) {
    ImageRow row;
    row.N = N;
    if (problem.mode != Mode::kBrute) {
      row.d_formula =
          tensor ? tensor_image_order_formula(f, problem.parameter, N)
                 : image_order_formula(f, problem.parameter, N);
    }
    if (!tensor)
      row.extra_m = extra_indices(f.p(), problem.parameter, N).size();
    if (problem.mode != Mode::kFormula) {
      row.d_brute =
          tensor ? tensor_image_order_brute(problem.spec, problem.parameter, N,
                                            problem.brute)
                 : image_order_brute(problem.spec, problem.parameter, N,
                                     problem.brute);
    }
    ImageOrder order;
    if (row.d_formula && row.d_brute) {
      try {
        row.matched = as_image_order(*row.d_brute, unit, f.order()) ==
                      *row.d_formula;
      } catch (const MalformedOrder&) {
        row.matched = false;
      }
      order = *row.d_formula;
    } else if (row.d_formula) {
      order = *row.d_formula;
    } else {
      order = as_image_order(*row.d_brute, unit, f.order());
    }
    row.delta = density_estimate(order, N, problem.group_dim());
    table.rows.push_back(row);
  }
  return table;
}

ImageTable tensor_density(const FqSpecPtr& spec, std::uint64_t d,
                          std::size_t n_max, Mode mode,
                          const BruteOptions& brute) {
  DensityProblem problem;
  problem.spec = spec;
  problem.family = Family::kTensorPower;
  problem.parameter = d;
  problem.n_max = n_max;
  problem.mode = mode;
  problem.brute = brute;
  return density_table(problem);
}

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

}  // namespace

std::string to_csv(const ImageTable& table) {
  const unsigned q = table.problem.spec->order();
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : table.rows) {
    out << r.N << ',';
    if (r.d_brute) out << *r.d_brute;
    out << ',';
    if (r.d_formula) out << r.d_formula->to_decimal(q);
    out << ',';
    if (r.extra_m) out << *r.extra_m;
    out << ',' << r.delta.exponent << ',' << r.delta.denominator << ','
        << format_real(r.delta.value(q)) << '\n';
  }
  return out.str();
}

std::string to_json(const ImageTable& table) {
  using nlohmann::ordered_json;
  const DensityProblem& pr = table.problem;
  const FqSpec& f = *pr.spec;
  ordered_json header;
  header["family"] =
      pr.family == Family::kProlongation ? "prolongation" : "tensor";
  header["q"] = f.order();
  header["p"] = f.p();
  header["e"] = f.degree();
  header[pr.family == Family::kProlongation ? "k" : "d"] = pr.parameter;
  header["n_max"] = pr.n_max;
  header["mode"] = to_string(pr.mode);
  header["seed"] = pr.seed;

  ordered_json rows = ordered_json::array();
  for (const auto& r : table.rows) {
    ordered_json row;
    row["N"] = r.N;
    row["D_brute"] = r.d_brute ? ordered_json(std::to_string(*r.d_brute))
                               : ordered_json(nullptr);
    row["D_formula"] = r.d_formula
                           ? ordered_json(r.d_formula->to_decimal(f.order()))
                           : ordered_json(nullptr);
    row["extra_m"] = r.extra_m ? ordered_json(*r.extra_m) : ordered_json(nullptr);
    row["delta_hat_num"] = r.delta.exponent;
    row["delta_hat_den"] = r.delta.denominator;
    row["delta_hat_real"] = format_real(r.delta.value(f.order()));
    rows.push_back(std::move(row));
  }
  ordered_json doc;
  doc["header"] = std::move(header);
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

// --- motivic group ------------------------------------------------------------

bool motivic_group_check(const FqSpecPtr& spec, std::size_t k,
                         std::size_t prec, std::size_t samples,
                         std::uint64_t seed) {
  if (samples == 0) return true;
  std::mt19937_64 rng(seed);
  const unsigned q = spec->order();
  std::vector<JetMatrix> group;
  group.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<TruncSeries> rows;
    for (std::size_t j = 0; j <= k; ++j) {
      std::vector<FqRaw> c(prec);
      for (auto& v : c) v = static_cast<FqRaw>(rng() % q);
      if (j == 0) c[0] = static_cast<FqRaw>(1 + rng() % (q - 1));
      rows.emplace_back(spec, std::move(c));
    }
    group.emplace_back(std::move(rows));
  }
  const JetMatrix id = JetMatrix::identity(spec, k, prec);
  for (std::size_t s = 0; s < samples; ++s) {
    const JetMatrix& a = group[s];
    const JetMatrix& b = group[(s + 1) % samples];
    const JetMatrix& c = group[(s + 2) % samples];
    if (a.dim() != motivic_group_dim(k)) return false;
    const JetMatrix ab = jet_mul(a, b);
    if (!ab.is_invertible()) return false;
    const JetMatrix ainv = jet_inv(a);
    if (!ainv.is_invertible()) return false;
    if (!(jet_mul(a, ainv) == id) || !(jet_mul(ainv, a) == id)) return false;
    if (!(jet_mul(ab, c) == jet_mul(a, jet_mul(b, c)))) return false;
  }
  return true;
}

// --- Zariski certificate --------------------------------------------------------

std::vector<std::vector<unsigned>> monomials_up_to(std::size_t vars,
                                                   unsigned deg_bound) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(vars, 0);
  // All compositions of each degree into `vars` parts, X_0 exponent
  // descending first.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                       unsigned left) {
    if (i + 1 == vars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  for (unsigned deg = 0; deg <= deg_bound; ++deg) rec(0, deg);
  return out;
}

namespace {

// Incremental row echelon form over F_q; rows are stored with pivot 1 and
// zeros left of the pivot.
class Echelon {
 public:
  Echelon(const FqSpec& f, std::size_t cols) : f_(f), basis_(cols) {}

  std::size_t rank() const { return rank_; }
  bool full() const { return rank_ == basis_.size(); }

  void insert(std::vector<FqRaw> v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      if (basis_[c].empty()) {
        const FqRaw s = f_.inv(v[c]);
        for (std::size_t i = c; i < v.size(); ++i) v[i] = f_.mul(v[i], s);
        basis_[c] = std::move(v);
        ++rank_;
        return;
      }
      const FqRaw s = v[c];
      const auto& b = basis_[c];
      for (std::size_t i = c; i < v.size(); ++i)
        v[i] = f_.sub(v[i], f_.mul(s, b[i]));
    }
  }

 private:
  const FqSpec& f_;
  std::vector<std::vector<FqRaw>> basis_;
  std::size_t rank_ = 0;
};

}  // namespace

RankCertificate zariski_rank_certificate(const FqSpecPtr& spec, std::size_t k,
                                         unsigned deg_bound,
                                         unsigned tdeg_bound, std::size_t N,
                                         const std::vector<UnitClass>& units,
                                         std::uint64_t budget) {
  if (N == 0) throw InsufficientPrecision("reduction level N must be >= 1");
  const FqSpec& f = *spec;
  const auto monos = monomials_up_to(k + 1, deg_bound);
  const std::size_t cols = monos.size() * (tdeg_bound + 1);
  const std::uint64_t work =
      static_cast<std::uint64_t>(units.size()) * N * cols;
  if (work > budget)
    throw BudgetExceeded("rank certificate needs " + std::to_string(work) +
                         " matrix entries, budget " + std::to_string(budget));

  RankCertificate cert;
  cert.columns = cols;
  cert.units = units.size();
  Echelon ech(f, cols);
  for (const auto& a : units) {
    const JetMatrix j = galois_rep(a, k, N);
    // Powers X_i^e mod t^N for e <= deg_bound.
    std::vector<std::vector<TruncSeries>> powers(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      powers[i].push_back(TruncSeries::one(spec, N));
      for (unsigned e = 1; e <= deg_bound; ++e)
        powers[i].push_back(powers[i].back() * j.row(i));
    }
    std::vector<TruncSeries> values;
    values.reserve(monos.size());
    for (const auto& m : monos) {
      TruncSeries v = TruncSeries::one(spec, N);
      for (std::size_t i = 0; i <= k; ++i)
        if (m[i]) v *= powers[i][m[i]];
      values.push_back(std::move(v));
    }
    for (std::size_t r = 0; r < N; ++r) {
      std::vector<FqRaw> row(cols, 0);
      for (std::size_t mi = 0; mi < monos.size(); ++mi)
        for (unsigned s = 0; s <= tdeg_bound && s <= r; ++s)
          row[mi * (tdeg_bound + 1) + s] = values[mi].raw(r - s);
      ++cert.rows;
      ech.insert(std::move(row));
    }
  }
  cert.rank = ech.rank();
  cert.full_rank = ech.full();
  return cert;
}

RankCertificate zariski_rank_certificate(const FqSpecPtr& spec, std::size_t k,
                                         unsigned deg_bound,
                                         unsigned tdeg_bound, std::size_t N,
                                         const ZariskiOptions& opts) {
  if (N == 0) throw InsufficientPrecision("reduction level N must be >= 1");
  const std::size_t prec = N + k;
  const std::uint64_t total = unit_count(spec->order(), prec);
  std::vector<UnitClass> units;
  const bool exhaustive = total <= opts.exhaustive_limit;
  if (exhaustive) {
    units = unit_enumerate(spec, prec, opts.exhaustive_limit);
  } else {
    const std::vector<FqRaw> order = fq_enumerate_raw(*spec);
    const std::size_t q = order.size();
    std::mt19937_64 rng(opts.seed);
    units.reserve(opts.samples);
    for (std::size_t s = 0; s < opts.samples; ++s) {
      std::vector<FqRaw> c(prec);
      c[0] = order[1 + rng() % (q - 1)];
      for (std::size_t i = 1; i < prec; ++i) c[i] = order[rng() % q];
      units.emplace_back(TruncSeries(spec, std::move(c)));
    }
  }
  RankCertificate cert = zariski_rank_certificate(spec, k, deg_bound,
                                                  tdeg_bound, N, units,
                                                  opts.budget);
  cert.exhaustive = exhaustive;
  return cert;
}

}  // namespace carlitz
