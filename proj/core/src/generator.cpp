#include "sccpref/generator.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sccpref/errors.hpp"
#include "sccpref/rng.hpp"

namespace sccpref {

void validate(const GenParams& p) {
  if (p.scc_count < 1) throw ParameterError("scc_count must be at least 1");
  if (p.min_args < 1) throw ParameterError("args_per_scc minimum must be at least 1");
  if (p.min_args > p.max_args) throw ParameterError("args_per_scc range is empty");
  if (!(p.p_intra >= 0.0 && p.p_intra <= 1.0)) throw ParameterError("p_intra must lie in [0,1]");
  if (!(p.p_inter >= 0.0 && p.p_inter <= 1.0)) throw ParameterError("p_inter must lie in [0,1]");
}

ArgumentationFramework generate(const GenParams& p) {
  validate(p);
  SplitMix64 rng(p.seed);

  std::vector<std::size_t> sizes(p.scc_count);
  std::vector<std::size_t> offset(p.scc_count + 1, 0);
  for (std::size_t i = 0; i < p.scc_count; ++i) {
    sizes[i] = p.min_args + static_cast<std::size_t>(rng.uniform(p.max_args - p.min_args + 1));
    offset[i + 1] = offset[i] + sizes[i];
  }
  const std::size_t n = offset.back();

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "a" + std::to_string(i);

  std::vector<ArgumentationFramework::Attack> attacks;
  for (std::size_t c = 0; c < p.scc_count; ++c) {
    const std::size_t k = sizes[c];
    const auto base = static_cast<ArgId>(offset[c]);
    if (k == 1) {
      if (p.singleton_self_attack) attacks.emplace_back(base, base);
      continue;
    }
    for (std::size_t x = 0; x < k; ++x) {
      attacks.emplace_back(base + x, base + (x + 1) % k);
    }
    if (p.p_intra > 0.0) {
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          if (x == y || y == (x + 1) % k) continue;
          if (rng.bernoulli(p.p_intra)) attacks.emplace_back(base + x, base + y);
        }
      }
    }
  }

  std::vector<std::size_t> order(p.scc_count);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = p.scc_count; i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform(i)]);
  }

  if (p.p_inter > 0.0) {
    for (std::size_t i = 0; i < p.scc_count; ++i) {
      for (std::size_t j = i + 1; j < p.scc_count; ++j) {
        const std::size_t from = order[i];
        const std::size_t to = order[j];
        for (std::size_t a = offset[from]; a < offset[from + 1]; ++a) {
          for (std::size_t b = offset[to]; b < offset[to + 1]; ++b) {
            if (rng.bernoulli(p.p_inter)) attacks.emplace_back(static_cast<ArgId>(a), static_cast<ArgId>(b));
          }
        }
      }
    }
  }

  return ArgumentationFramework::from_indices(std::move(names), attacks);
}

}  // namespace sccpref
