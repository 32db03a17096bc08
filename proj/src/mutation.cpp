#include "thetagr/mutation.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace thetagr {

std::vector<ProductKey> nonzero_products(const CoordinateData& data) {
  std::vector<ProductKey> out;
  for (const auto& [k, m] : data.products)
    if (!m.is_zero()) out.push_back(k);
  return out;
}

CoordinateData flip_sign(const CoordinateData& data, const ProductKey& key) {
  CoordinateData out = data;
  auto it = out.products.find(key);
  if (it == out.products.end()) throw std::invalid_argument("no product " + key.to_string());
  it->second *= Rational(-1);
  return out;
}

namespace {

std::map<std::string, std::size_t> failure_counts(const Section4Report& r) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : r.checks)
    if (c.asserted) out[c.name] = c.failures;
  return out;
}

}  // namespace

std::vector<MutationOutcome> run_mutations(const CoordinateData& data, const MutationOptions& opt) {
  std::vector<ProductKey> keys = nonzero_products(data);
  if (opt.count != 0 && opt.count < keys.size()) {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(keys.begin(), keys.end(), rng);
    keys.resize(opt.count);
  }
  const GradedLieAlgebra base_l = assemble(data);
  const auto base = failure_counts(verify_section4(data, &base_l));

  std::vector<MutationOutcome> out;
  for (const auto& key : keys) {
    MutationOutcome m;
    m.key = key;
    const CoordinateData d = flip_sign(data, key);
    const GradedLieAlgebra l = assemble(d);
    const JacobiReport j = check_jacobi(l.sc, opt.jacobi, opt.samples, opt.seed);
    m.jacobi_violations = j.violations;
    m.jacobi_antisymmetric = j.antisymmetric;
    try {
      for (const auto& [name, f] : failure_counts(verify_section4(d, &l))) {
        auto it = base.find(name);
        if (it == base.end() || f > it->second) m.new_failures.push_back(name);
      }
    } catch (const ConditionViolated& e) {
      m.new_failures.push_back(e.what());
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace thetagr
