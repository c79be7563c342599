#include "lspec/chebotarev.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "lspec/error.hpp"

namespace lspec {

namespace {

constexpr u64 kMinCompositumHeight = 10'000;

// Visits every prime in [3, hi] in segments; each segment is cut into
// contiguous chunks handled by separate threads, and the per-chunk results
// are merged in chunk order so the output never depends on `threads`.
template <class Acc, class Visit, class Merge>
void parallel_prime_scan(u64 hi, unsigned threads, u64 segment_size, Acc& total, Visit visit, Merge merge) {
  threads = std::max(1u, threads);
  for_each_prime_segment(3, hi, segment_size, [&](const std::vector<u64>& primes) {
    const std::size_t n = primes.size();
    const std::size_t chunks = std::min<std::size_t>(threads, std::max<std::size_t>(n, 1));
    std::vector<Acc> parts(chunks);
    auto run = [&](std::size_t c) {
      const std::size_t lo = n * c / chunks, end = n * (c + 1) / chunks;
      for (std::size_t i = lo; i < end; ++i) visit(parts[c], primes[i]);
    };
    if (chunks == 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(run, c);
    }
    for (auto& part : parts) merge(total, std::move(part));
  });
}

bool denominators_coprime(const std::vector<QuadraticExtension>& exts, u64 p) {
  for (const auto& L : exts)
    if (reduce(L.radicand().denominator(), p) == 0) return false;
  return true;
}

bool in_avoid_set(const std::vector<PrimeIdeal>& avoid, const PrimeIdeal& P) {
  return std::find(avoid.begin(), avoid.end(), P) != avoid.end();
}

struct ScanPart {
  std::vector<PrimeIdeal> stream;
  u64 eligible = 0;
};

}  // namespace

std::string_view to_string(OverlapPolicy p) { return p == OverlapPolicy::Disjoint ? "disjoint" : "sliding"; }

OverlapPolicy parse_overlap_policy(std::string_view text) {
  if (text == "disjoint") return OverlapPolicy::Disjoint;
  if (text == "sliding") return OverlapPolicy::Sliding;
  throw Error(ErrorKind::InvalidInput, "overlap policy must be 'disjoint' or 'sliding', got '" + std::string(text) + "'");
}

void validate(const SearchSpec& spec) {
  if (spec.k < 1) throw Error(ErrorKind::InvalidInput, "k must be at least 1");
  if (spec.height < 3) throw Error(ErrorKind::InvalidInput, "height must be at least 3");
  if (spec.extensions.empty()) throw Error(ErrorKind::InvalidInput, "at least one extension is required");
  if (spec.target.size() != spec.extensions.size())
    throw Error(ErrorKind::InvalidInput, "target has " + std::to_string(spec.target.size()) + " entries but there are " +
                                             std::to_string(spec.extensions.size()) + " extensions");
  for (const auto& L : spec.extensions)
    if (!(L.field() == spec.field)) throw Error(ErrorKind::InvalidInput, "extension " + L.label() + " is over another field");
}

TargetScan scan_target_primes(const SearchSpec& spec) {
  validate(spec);
  auto check = compositum_degree_check(spec.extensions, std::max(spec.height, kMinCompositumHeight));
  if (!check.full)
    throw Error(ErrorKind::CompositumDegenerate, "Frobenius vectors span a subgroup of rank " + std::to_string(check.rank) +
                                                     " < " + std::to_string(check.r) + "; the extensions are not independent");
  ScanPart total;
  parallel_prime_scan(
      spec.height, spec.threads, spec.segment_size, total,
      [&](ScanPart& part, u64 p) {
        if (spec.field.is_excluded(p) || !denominators_coprime(spec.extensions, p)) return;
        bool eligible = false;
        for (const auto& P : degree_one_primes(spec.field, p)) {
          if (in_avoid_set(spec.avoid, P)) continue;
          auto fv = frobenius_vector(P, spec.extensions);
          const auto* v = std::get_if<FrobeniusVector>(&fv);
          if (!v) continue;
          eligible = true;
          if (*v == spec.target) {
            part.stream.push_back(P);
            break;
          }
        }
        part.eligible += eligible;
      },
      [](ScanPart& into, ScanPart&& part) {
        into.stream.insert(into.stream.end(), part.stream.begin(), part.stream.end());
        into.eligible += part.eligible;
      });
  return {std::move(total.stream), total.eligible};
}

std::vector<PrimeIdeal> enumerate_target_primes(const SearchSpec& spec) { return scan_target_primes(spec).stream; }

std::vector<PrimeTuple> find_bounded_gap_tuples(const SearchSpec& spec, const std::vector<PrimeIdeal>& stream) {
  if (spec.k < 1) throw Error(ErrorKind::InvalidInput, "k must be at least 1");
  const std::size_t k = static_cast<std::size_t>(spec.k);
  std::vector<PrimeTuple> out;
  auto make = [&](std::size_t i) {
    PrimeTuple t;
    t.primes.assign(stream.begin() + i, stream.begin() + i + k);
    t.witnesses.assign(k, spec.target);
    t.span = stream[i + k - 1].p - stream[i].p;
    return t;
  };
  for (std::size_t i = 0; i + k <= stream.size();) {
    if (stream[i + k - 1].p - stream[i].p <= spec.window) {
      out.push_back(make(i));
      i += spec.policy == OverlapPolicy::Disjoint ? k : 1;
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<PrimeTuple> find_bounded_gap_tuples(const SearchSpec& spec) {
  return find_bounded_gap_tuples(spec, enumerate_target_primes(spec));
}

GapStatistics gap_statistics(const SearchSpec& spec, const TargetScan& scan) {
  const auto& s = scan.stream;
  GapStatistics g;
  g.count = s.size();
  g.prime_count = prime_pi(spec.height);
  g.eligible = scan.eligible;
  g.predicted_density = std::ldexp(1.0, -static_cast<int>(spec.extensions.size()));
  if (g.eligible > 0) {
    const double n = static_cast<double>(g.eligible), q = g.predicted_density;
    g.empirical_density = static_cast<double>(g.count) / n;
    g.z_score = (static_cast<double>(g.count) - n * q) / std::sqrt(n * q * (1 - q));
  }
  for (std::size_t i = 1; i < s.size(); ++i) ++g.gap_histogram[s[i].p - s[i - 1].p];
  for (std::size_t j = 1; j <= static_cast<std::size_t>(spec.k) && j <= s.size(); ++j) {
    u64 best = ~u64{0};
    for (std::size_t i = 0; i + j <= s.size(); ++i) best = std::min(best, s[i + j - 1].p - s[i].p);
    g.min_span.push_back(best);
  }
  g.low_confidence = g.count < kLowConfidenceCount;
  return g;
}

GapStatistics gap_statistics(const SearchSpec& spec) { return gap_statistics(spec, scan_target_primes(spec)); }

FrobeniusCensus frobenius_census(const NumberField& field, const std::vector<QuadraticExtension>& exts, u64 height,
                                 unsigned threads, u64 segment_size) {
  if (exts.empty()) throw Error(ErrorKind::InvalidInput, "at least one extension is required");
  FrobeniusCensus total;
  parallel_prime_scan(
      height, threads, segment_size, total,
      [&](FrobeniusCensus& part, u64 p) {
        if (field.is_excluded(p) || !denominators_coprime(exts, p)) return;
        for (const auto& P : degree_one_primes(field, p)) {
          ++part.total;
          auto fv = frobenius_vector(P, exts);
          if (const auto* v = std::get_if<FrobeniusVector>(&fv))
            ++part.counts[*v];
          else
            ++part.ramified;
        }
      },
      [](FrobeniusCensus& into, FrobeniusCensus&& part) {
        for (const auto& [v, c] : part.counts) into.counts[v] += c;
        into.ramified += part.ramified;
        into.total += part.total;
      });
  return total;
}

}  // namespace lspec
