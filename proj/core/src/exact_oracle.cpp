#include "pottssos/exact_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "pottssos/errors.hpp"

namespace pottssos {

namespace {

// Chunk count is a function of the configuration count only, so the
// summation order (and the result) is independent of the worker count.
constexpr std::size_t kMaxChunks = 64;

std::size_t config_count(const FiniteTree& tree, int states) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < tree.vertex_count(); ++i) total *= static_cast<std::size_t>(states);
  return total;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

void check_fields(const FieldAssignment& fields, const FiniteTree& tree,
                  const ModelParams& params) {
  for (Vertex v : tree.boundary()) {
    if (fields.at(v).size() != static_cast<std::size_t>(params.m())) {
      throw DomainError("field at vertex " + std::to_string(v) + " has wrong length");
    }
  }
}

void check_cap(const FiniteTree& tree, const OracleOptions& options, int states) {
  if (tree.vertex_count() > options.max_vertices) {
    throw SizeError("tree with " + std::to_string(tree.vertex_count()) +
                    " vertices is above the enumeration cap of " +
                    std::to_string(options.max_vertices) + " (" + std::to_string(states) + "^" +
                    std::to_string(tree.vertex_count()) + " configurations)");
  }
}

// Pairwise sum of per-chunk bucket vectors, in chunk order.
std::vector<double> pairwise_reduce(std::vector<std::vector<double>> parts) {
  while (parts.size() > 1) {
    std::vector<std::vector<double>> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      for (std::size_t b = 0; b < parts[i].size(); ++b) parts[i][b] += parts[i + 1][b];
      next.push_back(std::move(parts[i]));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts.empty() ? std::vector<double>{} : std::move(parts.front());
}

// Sums splitting weights over every configuration into buckets chosen by
// bucket_of(spins).
template <class BucketOf>
std::vector<double> enumerate(const FiniteTree& tree, const FieldAssignment& fields,
                              const ModelParams& params, std::size_t bucket_count,
                              BucketOf bucket_of, const OracleOptions& options) {
  const int states = params.states();
  check_cap(tree, options, states);
  check_fields(fields, tree, params);

  const auto s = static_cast<std::size_t>(states);
  std::vector<double> weight(s * s);
  for (Spin i = 0; i < states; ++i) {
    for (Spin j = 0; j < states; ++j) weight[i * s + j] = edge_weight(i, j, params);
  }
  const auto boundary = tree.boundary();
  std::vector<double> boundary_factor(boundary.size() * s);
  for (std::size_t b = 0; b < boundary.size(); ++b) {
    const BoundaryField& h = fields.at(boundary[b]);
    for (std::size_t i = 0; i < s; ++i) boundary_factor[b * s + i] = std::exp(h.component(i));
  }
  const auto edges = tree.edges();
  const std::size_t n = tree.vertex_count();

  const std::size_t total = config_count(tree, states);
  const std::size_t chunks = std::min(total, kMaxChunks);
  std::vector<std::vector<double>> parts(chunks, std::vector<double>(bucket_count, 0.0));

  const auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = total * c / chunks;
    const std::size_t end = total * (c + 1) / chunks;
    std::vector<Spin> spins(n);
    std::size_t rest = begin;
    for (std::size_t v = 0; v < n; ++v) {
      spins[v] = static_cast<Spin>(rest % s);
      rest /= s;
    }
    auto& acc = parts[c];
    for (std::size_t idx = begin; idx < end; ++idx) {
      double w = 1.0;
      for (const auto& [x, y] : edges) w *= weight[spins[x] * s + spins[y]];
      for (std::size_t b = 0; b < boundary.size(); ++b) {
        w *= boundary_factor[b * s + static_cast<std::size_t>(spins[boundary[b]])];
      }
      acc[bucket_of(spins)] += w;
      for (std::size_t v = 0; v < n; ++v) {
        if (++spins[v] < states) break;
        spins[v] = 0;
      }
    }
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }
  return pairwise_reduce(std::move(parts));
}

std::vector<double> normalized(std::vector<double> v) {
  double z = 0.0;
  for (double x : v) z += x;
  for (double& x : v) x /= z;
  return v;
}

}  // namespace

FieldRule constant_rule(BoundaryField h) {
  return [h = std::move(h)](const FiniteTree& tree) { return FieldAssignment::constant(tree, h); };
}

FieldRule parity_rule(BoundaryField h_even, BoundaryField h_odd) {
  return [e = std::move(h_even), o = std::move(h_odd)](const FiniteTree& tree) {
    return FieldAssignment::parity_alternating(tree, e, o);
  };
}

double splitting_weight(const SpinConfiguration& config, const FieldAssignment& fields,
                        const FiniteTree& tree, const ModelParams& params) {
  if (config.size() != tree.vertex_count()) {
    throw DomainError("configuration does not cover the tree");
  }
  double w = 1.0;
  for (const auto& [x, y] : tree.edges()) w *= edge_weight(config[x], config[y], params);
  for (Vertex v : tree.boundary()) {
    w *= std::exp(fields.at(v).component(static_cast<std::size_t>(config[v])));
  }
  return w;
}

std::vector<double> exact_marginal(const FiniteTree& tree, const FieldAssignment& fields,
                                   const ModelParams& params, Vertex v,
                                   const OracleOptions& options) {
  if (v >= tree.vertex_count()) throw DomainError("vertex " + std::to_string(v) + " not in tree");
  const auto states = static_cast<std::size_t>(params.states());
  return normalized(enumerate(
      tree, fields, params, states,
      [v](const std::vector<Spin>& spins) { return static_cast<std::size_t>(spins[v]); },
      options));
}

std::vector<double> exact_inner_distribution(const FiniteTree& tree,
                                             const FieldAssignment& fields,
                                             const ModelParams& params, int inner_depth,
                                             const OracleOptions& options) {
  const std::size_t inner = tree.level_end(inner_depth);
  const auto s = static_cast<std::size_t>(params.states());
  const std::size_t buckets = power(s, inner);
  return normalized(enumerate(
      tree, fields, params, buckets,
      [inner, s](const std::vector<Spin>& spins) {
        std::size_t idx = 0;
        for (std::size_t v = inner; v-- > 0;) idx = idx * s + static_cast<std::size_t>(spins[v]);
        return idx;
      },
      options));
}

double consistency_gap(int k, int depth, const FieldRule& rule, const ModelParams& params,
                       const OracleOptions& options) {
  if (depth < 1) throw DomainError("consistency gap needs depth >= 1");
  const TreeOptions tree_options{RootMode::half, options.max_vertices, params.states()};
  const FiniteTree outer = build_tree(k, depth, tree_options);
  const FiniteTree inner = build_tree(k, depth - 1, tree_options);

  const auto marginal = exact_inner_distribution(outer, rule(outer), params, depth - 1, options);
  const auto direct = exact_inner_distribution(inner, rule(inner), params, depth - 1, options);

  double tv = 0.0;
  for (std::size_t i = 0; i < marginal.size(); ++i) tv += std::abs(marginal[i] - direct[i]);
  return 0.5 * tv;
}

}  // namespace pottssos
