#include "monty/montecarlo.hpp"

#include "monty/enumeration.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace monty {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::uint32_t k0, std::uint32_t k1) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k0,
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k1,
           static_cast<std::uint32_t>(p0)};
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return ctr;
}

}  // namespace

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial)
    : key0_(static_cast<std::uint32_t>(seed)),
      key1_(static_cast<std::uint32_t>(seed >> 32)),
      trial_lo_(static_cast<std::uint32_t>(trial)),
      trial_hi_(static_cast<std::uint32_t>(trial >> 32)) {}

void TrialStream::refill() {
  lanes_ = philox4x32_10({trial_lo_, trial_hi_, block_, 0}, key0_, key1_);
  ++block_;
  available_ = 4;
}

std::uint64_t TrialStream::next_u64() {
  if (available_ < 2) refill();
  const std::uint64_t hi = lanes_[static_cast<std::size_t>(available_) - 1];
  const std::uint64_t lo = lanes_[static_cast<std::size_t>(available_) - 2];
  available_ -= 2;
  return (hi << 32) | lo;
}

std::uint64_t TrialStream::uniform(std::uint64_t n) {
  std::uint64_t x = next_u64();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = -n % n;
    while (low < threshold) {
      x = next_u64();
      m = static_cast<unsigned __int128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

namespace {

enum : std::int8_t { kUnclaimed = 0, kPicked = 1, kOpened = 2 };

// Per-worker scratch space; nothing allocates inside the trial loop.
struct Workspace {
  std::vector<std::int8_t> is_car;
  std::vector<std::int8_t> status;
  std::vector<std::int32_t> order;  // partial-shuffle buffer for the layout
  std::vector<std::int32_t> avail;  // unclaimed door ids, swap-remove on claim
  std::vector<int> picks;           // 1 = car, in plan order

  explicit Workspace(const ValidatedGame& game) {
    const auto d = static_cast<std::size_t>(game.scenario().doors);
    is_car.assign(d, 0);
    status.assign(d, kUnclaimed);
    order.resize(d);
    avail.resize(d);
    picks.assign(static_cast<std::size_t>(game.total_picks()), 0);
  }
};

// Plays one trial; fills ws.picks with the player's car/goat outcomes.
void play_trial(const ValidatedGame& game, TrialStream& rng, Workspace& ws) {
  const long long d = game.scenario().doors;
  const long long c = game.scenario().cars;

  std::fill(ws.is_car.begin(), ws.is_car.end(), std::int8_t{0});
  std::fill(ws.status.begin(), ws.status.end(), kUnclaimed);
  for (long long i = 0; i < d; ++i) ws.order[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
  for (long long i = 0; i < c; ++i) {
    const auto j = i + static_cast<long long>(rng.uniform(static_cast<std::uint64_t>(d - i)));
    std::swap(ws.order[static_cast<std::size_t>(i)], ws.order[static_cast<std::size_t>(j)]);
    ws.is_car[static_cast<std::size_t>(ws.order[static_cast<std::size_t>(i)])] = 1;
  }

  long long n_avail = d;
  for (long long i = 0; i < d; ++i) ws.avail[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);

  std::size_t slot = 0;
  for (const Phase& ph : game.plan()) {
    if (ph.kind == PhaseKind::Pick) {
      for (long long i = 0; i < ph.count; ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::uint64_t>(n_avail)));
        const std::int32_t door = ws.avail[j];
        ws.avail[j] = ws.avail[static_cast<std::size_t>(n_avail) - 1];
        --n_avail;
        ws.status[static_cast<std::size_t>(door)] = kPicked;
        ws.picks[slot++] = ws.is_car[static_cast<std::size_t>(door)];
      }
    } else {
      for (long long i = 0; i < ph.count; ++i) {
        long long goats = 0;
        for (long long k = 0; k < n_avail; ++k) {
          goats += 1 - ws.is_car[static_cast<std::size_t>(ws.avail[static_cast<std::size_t>(k)])];
        }
        auto r = static_cast<long long>(rng.uniform(static_cast<std::uint64_t>(goats)));
        std::size_t j = 0;
        for (;; ++j) {
          if (!ws.is_car[static_cast<std::size_t>(ws.avail[j])] && r-- == 0) break;
        }
        const std::int32_t door = ws.avail[j];
        ws.avail[j] = ws.avail[static_cast<std::size_t>(n_avail) - 1];
        --n_avail;
        ws.status[static_cast<std::size_t>(door)] = kOpened;
      }
    }
  }
}

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

SimulationEstimate finish(std::uint64_t trials, std::uint64_t successes, std::uint64_t seed,
                          unsigned workers) {
  SimulationEstimate est;
  est.trials = trials;
  est.successes = successes;
  est.seed = seed;
  est.workers = workers;
  est.estimate = static_cast<double>(successes) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

// Runs [0, trials) split into contiguous chunks, one thread per chunk.
// `score` maps a played trial to 0/1 per arm; arms accumulate independently.
template <int Arms, typename Score>
std::array<std::uint64_t, Arms> run_trials(const ValidatedGame& game, std::uint64_t trials,
                                           std::uint64_t seed, unsigned workers,
                                           const Score& score) {
  const auto run_chunk = [&](std::uint64_t begin, std::uint64_t end,
                             std::array<std::uint64_t, Arms>& out) {
    Workspace ws(game);
    std::array<std::uint64_t, Arms> acc{};
    for (std::uint64_t t = begin; t < end; ++t) {
      TrialStream rng(seed, t);
      play_trial(game, rng, ws);
      const std::array<int, Arms> hits = score(ws);
      for (int a = 0; a < Arms; ++a) acc[static_cast<std::size_t>(a)] += static_cast<std::uint64_t>(hits[static_cast<std::size_t>(a)]);
    }
    out = acc;
  };

  if (workers <= 1 || trials < workers) {
    std::array<std::uint64_t, Arms> acc{};
    run_chunk(0, trials, acc);
    return acc;
  }

  std::vector<std::array<std::uint64_t, Arms>> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t base = trials / workers;
  const std::uint64_t extra = trials % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t len = base + (w < extra ? 1 : 0);
    threads.emplace_back(run_chunk, begin, begin + len, std::ref(partial[w]));
    begin += len;
  }
  for (auto& th : threads) th.join();

  std::array<std::uint64_t, Arms> total{};
  for (const auto& part : partial) {
    for (int a = 0; a < Arms; ++a) total[static_cast<std::size_t>(a)] += part[static_cast<std::size_t>(a)];
  }
  return total;
}

}  // namespace

SimulationEstimate simulate(const ValidatedGame& game, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("simulate: need at least one trial");
  const unsigned n_workers = resolve_workers(workers);
  const auto counts = run_trials<1>(
      game, trials, seed, n_workers, [&](const Workspace& ws) -> std::array<int, 1> {
        return {sequence_satisfies(game, ws.picks, game.predicate()) ? 1 : 0};
      });
  return finish(trials, counts[0], seed, n_workers);
}

PolicyComparison simulate_policy_comparison(const ValidatedGame& game, std::uint64_t trials,
                                            std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("simulate: need at least one trial");
  const unsigned n_workers = resolve_workers(workers);
  const OutcomePredicate stay_pred{Segment::Anterior, game.predicate().kind,
                                   game.predicate().k};
  (void)game.with_predicate(stay_pred);  // rejects a predicate that cannot fit the opening picks

  const auto counts = run_trials<2>(
      game, trials, seed, n_workers, [&](const Workspace& ws) -> std::array<int, 2> {
        return {sequence_satisfies(game, ws.picks, stay_pred) ? 1 : 0,
                sequence_satisfies(game, ws.picks, game.predicate()) ? 1 : 0};
      });

  return {finish(trials, counts[0], seed, n_workers),
          finish(trials, counts[1], seed, n_workers)};
}

}  // namespace monty
