#include "capelli/eigenvalues.hpp"

#include "capelli/error.hpp"

namespace capelli {

const MPoly* PolynomialCache::find(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const MPoly& PolynomialCache::store(const std::string& key, MPoly value) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, std::move(value));
  // Losing a race is fine: identical key means identical polynomial.
  return it->second;
}

namespace {

void require_free_or_override(const JordanCase& c) {
  if (is_multiplicity_free(c) || c.diagnostic_override()) return;
  throw Error("NOT_MULTIPLICITY_FREE",
              c.describe() + " is not multiplicity-free: theta_J = " +
                  to_string(c.theta()) + " lies in S(" +
                  std::to_string(c.r_plus()) + "," +
                  std::to_string(c.r_minus()) + ")");
}

MPoly compute_normalized(const JordanCase& c, const Partition& lambda) {
  const Rational scale_num = factorial(lambda.weight());
  if (c.is_type_a()) {
    const InterpolationResult r =
        super_jack_shifted(c.r_plus(), c.r_minus(), c.theta(), lambda);
    return r.poly * (scale_num / hook_product_theta(lambda, c.theta()));
  }
  const InterpolationResult r = factorial_schur_q(c.rank(), lambda);
  return r.poly * (scale_num / hook_product_q(lambda));
}

} // namespace

MPoly normalized_poly(const JordanCase& c, const Partition& lambda,
                      PolynomialCache* cache) {
  require_free_or_override(c);
  if (!cache) return compute_normalized(c, lambda);
  const std::string key = c.describe() + "|" + lambda.str();
  if (const MPoly* hit = cache->find(key)) return *hit;
  return cache->store(key, compute_normalized(c, lambda));
}

Rational eigenvalue(const JordanCase& c, const Partition& mu,
                    const Partition& lambda, PolynomialCache* cache) {
  const MPoly p = normalized_poly(c, mu, cache);
  return poly_eval(p, composite_coordinates(c, lambda));
}

CapelliReport verify_capelli_lemma(const JordanCase& c, long d,
                                   PolynomialCache* cache) {
  CapelliReport report;
  report.case_desc = c.describe();
  report.degree = d;
  const auto mus = omega(c, d);
  const auto lambdas = omega_up_to(c, d);
  const Rational diag = factorial(d);
  for (const Partition& mu : mus) {
    const MPoly p = normalized_poly(c, mu, cache);
    for (const Partition& lambda : lambdas) {
      CapelliCheck check;
      check.mu = mu;
      check.lambda = lambda;
      check.expected = (mu == lambda) ? diag : Rational(0);
      check.actual = poly_eval(p, composite_coordinates(c, lambda));
      check.pass = (check.actual == check.expected);
      report.all_pass = report.all_pass && check.pass;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

EigenvalueTable::EigenvalueTable(
    JordanCase c, long max_degree, std::vector<Partition> partitions,
    std::map<std::pair<Partition, Partition>, Rational> entries)
    : case_(std::move(c)),
      max_degree_(max_degree),
      partitions_(std::move(partitions)),
      entries_(std::move(entries)) {}

Rational EigenvalueTable::at(const Partition& mu, const Partition& lambda) const {
  auto it = entries_.find({mu, lambda});
  if (it == entries_.end())
    throw Error("BAD_REQUEST", "table has no entry for (mu, lambda)");
  return it->second;
}

EigenvalueTable eigenvalue_table(const JordanCase& c, long d) {
  require_free_or_override(c);
  PolynomialCache cache;
  const auto parts = omega_up_to(c, d);
  std::map<std::pair<Partition, Partition>, Rational> entries;
  for (const Partition& mu : parts) {
    const MPoly p = normalized_poly(c, mu, &cache);
    for (const Partition& lambda : parts)
      entries[{mu, lambda}] = poly_eval(p, composite_coordinates(c, lambda));
  }
  EigenvalueTable table(c, d, parts, std::move(entries));
  // Diagonal law and upper-triangular vanishing hold by the eigenvalue
  // theorem for the cases whose composite coordinates are the Frobenius
  // (or padded-partition) points; III and IV are diagnostic.
  const bool validated = c.tag() != CaseTag::III && c.tag() != CaseTag::IV;
  if (validated) {
    for (const Partition& mu : parts) {
      for (const Partition& lambda : parts) {
        if (lambda.weight() > mu.weight()) continue;
        const Rational expected =
            (mu == lambda) ? factorial(mu.weight()) : Rational(0);
        if (table.at(mu, lambda) != expected)
          throw Error("NO_SOLUTION",
                      "eigenvalue table violates the diagonal law for " +
                          c.describe());
      }
    }
  }
  return table;
}

} // namespace capelli
