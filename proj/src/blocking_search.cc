// Copyright 2026 The extmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blocking_search.h"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "extmatch/assignment.h"
#include "extmatch/errors.h"

namespace extmatch::internal {
namespace {

using AgentMask = std::uint32_t;
using EdgeMask = std::uint64_t;

EdgeMask Bit(int i) { return EdgeMask{1} << i; }

// Expands the low bits of `k` onto the positions listed in `slots`.
EdgeMask Deposit(std::uint64_t k, const std::vector<int>& slots) {
  EdgeMask out = 0;
  for (std::size_t i = 0; k != 0; ++i, k >>= 1) {
    if (k & 1) out |= Bit(slots[i]);
  }
  return out;
}

class Kernel {
 public:
  Kernel(const Game& game, const Matching& current, Attitude attitude,
         Strength strength, bool corewise)
      : game_(game), current_(current), attitude_(attitude),
        strength_(strength), corewise_(corewise),
        one_to_one_(game.mode() == Mode::kOneToOne),
        n_(game.num_agents()), e_(game.num_edges()) {
    for (int index = 0; index < e_; ++index) {
      const Edge e = game.EdgeAt(index);
      ends_.push_back((AgentMask{1} << game.ManAgent(e.man)) |
                      (AgentMask{1} << game.WomanAgent(e.woman)));
    }
    for (Edge e : current) a_ |= Bit(game.EdgeIndex(e));
    for (int z = 0; z < n_; ++z) before_.push_back(SumOver(z, a_));
  }

  std::optional<BlockingCertificate> Run(int max_coalition) {
    const int top = std::min(max_coalition, n_);
    for (int k = 1; k <= top; ++k) {
      std::vector<int> pick(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        if (auto found = TryCoalition(pick)) return found;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n_ - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
    return std::nullopt;
  }

 private:
  Ticks V(int z, int edge) const {
    return game_.ValueTicks(edge, z);
  }

  Ticks SumOver(int z, EdgeMask mask) const {
    Ticks total = 0;
    while (mask) {
      total += V(z, std::countr_zero(mask));
      mask &= mask - 1;
    }
    return total;
  }

  AgentMask Ends(EdgeMask mask) const {
    AgentMask out = 0;
    while (mask) {
      out |= ends_[static_cast<std::size_t>(std::countr_zero(mask))];
      mask &= mask - 1;
    }
    return out;
  }

  // One-to-one edge subsets of `slots`, ascending as masks.
  void OneToOneSubsets(const std::vector<int>& slots, std::size_t from,
                       AgentMask used, EdgeMask chosen,
                       std::vector<EdgeMask>& out) const {
    out.push_back(chosen);
    for (std::size_t i = from; i < slots.size(); ++i) {
      const AgentMask ends = ends_[static_cast<std::size_t>(slots[i])];
      if (ends & used) continue;
      OneToOneSubsets(slots, i + 1, used | ends, chosen | Bit(slots[i]), out);
    }
  }

  std::optional<BlockingCertificate> TryCoalition(const std::vector<int>& members) {
    AgentMask b = 0;
    for (int z : members) b |= AgentMask{1} << z;
    std::vector<int> inner;
    EdgeMask inner_mask = 0;
    EdgeMask cross = 0;
    EdgeMask outside = 0;
    for (int index = 0; index < e_; ++index) {
      const AgentMask ends = ends_[static_cast<std::size_t>(index)];
      if ((ends & ~b) == 0) {
        inner.push_back(index);
        inner_mask |= Bit(index);
      } else if ((ends & b) == 0) {
        outside |= Bit(index);
      } else if (a_ & Bit(index)) {
        cross |= Bit(index);
      }
    }
    const EdgeMask a_inner = a_ & inner_mask;
    // Every member needs some possible action.
    if (((Ends(inner_mask) | Ends(cross)) & b) != b) {
      return std::nullopt;
    }
    const AgentMask cross_ends = Ends(cross) & b;

    std::vector<int> cross_slots;
    for (EdgeMask m = cross; m; m &= m - 1) cross_slots.push_back(std::countr_zero(m));

    const std::size_t k = members.size();
    std::vector<Ticks> out(k, 0);
    bool out_ready = false;
    auto prepare_outside = [&]() {
      if (out_ready) return;
      out_ready = true;
      std::vector<char> inside(static_cast<std::size_t>(n_), 0);
      for (int z : members) inside[static_cast<std::size_t>(z)] = 1;
      for (std::size_t i = 0; i < k; ++i) {
        const int z = members[i];
        if (one_to_one_) {
          out[i] = OneToOneReaction(game_, current_, inside, z, attitude_);
          continue;
        }
        Ticks total = 0;
        for (int index = 0; index < e_; ++index) {
          const Ticks v = V(z, index);
          const bool in_outside = outside & Bit(index);
          switch (attitude_) {
            case Attitude::kNeutral:
              if (in_outside && (a_ & Bit(index))) total += v;
              break;
            case Attitude::kOptimistic:
              if (!(inner_mask & Bit(index))) total += std::max<Ticks>(v, 0);
              break;
            case Attitude::kPessimistic:
              if (in_outside) total += std::min<Ticks>(v, 0);
              break;
            case Attitude::kRestrictedPessimistic:
              throw PreconditionError(
                  "restricted-pessimistic estimates exist only in one-to-one games");
          }
        }
        out[i] = total;
      }
    };

    std::vector<EdgeMask> internals;
    if (one_to_one_) {
      OneToOneSubsets(inner, 0, 0, 0, internals);
      std::sort(internals.begin(), internals.end());
    } else {
      if (inner.size() > 30) {
        throw GuardError("coalition has too many internal matches to enumerate");
      }
      internals.reserve(std::size_t{1} << inner.size());
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << inner.size()); ++i) {
        internals.push_back(Deposit(i, inner));
      }
    }

    std::vector<Ticks> base(k);
    std::vector<Ticks> est(k);
    const bool cross_matters = !one_to_one_ && attitude_ != Attitude::kOptimistic;
    for (EdgeMask internal_edges : internals) {
      const AgentMask acted =
          Ends(internal_edges & ~a_) | Ends(a_inner & ~internal_edges);
      const AgentMask need = b & ~acted;
      if ((need & cross_ends) != need) continue;
      prepare_outside();
      for (std::size_t i = 0; i < k; ++i) {
        base[i] = SumOver(members[i], internal_edges) + out[i];
      }

      // One-to-one and corewise deviations sever every cross edge; any
      // other severance leaves a member idle or breaks one-to-one.
      const bool all_severed = one_to_one_ || corewise_;
      const std::uint64_t first = all_severed ? (std::uint64_t{1} << cross_slots.size()) - 1 : 0;
      const std::uint64_t last = (std::uint64_t{1} << cross_slots.size()) - 1;
      for (std::uint64_t s = first; s <= last; ++s) {
        const EdgeMask severed = Deposit(s, cross_slots);
        if ((Ends(severed) & need) != need) continue;
        const EdgeMask kept = cross & ~severed;
        bool strict = false;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          Ticks value = base[i];
          if (cross_matters) {
            for (EdgeMask m = kept; m; m &= m - 1) {
              const Ticks v = V(members[i], std::countr_zero(m));
              value += attitude_ == Attitude::kNeutral ? v : std::min<Ticks>(v, 0);
            }
          }
          est[i] = value;
          const Ticks before = before_[static_cast<std::size_t>(members[i])];
          if (value > before) {
            strict = true;
          } else if (value < before || strength_ == Strength::kWeak) {
            ok = false;
          }
        }
        if (ok && strict) {
          return Certificate(members, internal_edges, severed, est);
        }
        // Estimates ignore the severed set here; no later choice differs.
        if (!cross_matters) break;
      }
    }
    return std::nullopt;
  }

  BlockingCertificate Certificate(const std::vector<int>& members,
                                  EdgeMask internal_edges, EdgeMask severed,
                                  const std::vector<Ticks>& est) const {
    BlockingCertificate cert;
    cert.deviation.coalition = members;
    for (EdgeMask m = internal_edges; m; m &= m - 1) {
      cert.deviation.internal.insert(game_.EdgeAt(std::countr_zero(m)));
    }
    for (EdgeMask m = severed; m; m &= m - 1) {
      cert.deviation.severed.insert(game_.EdgeAt(std::countr_zero(m)));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      cert.before.push_back(
          game_.scale().FromTicks(before_[static_cast<std::size_t>(members[i])]));
      cert.after.push_back(game_.scale().FromTicks(est[i]));
    }
    return cert;
  }

  const Game& game_;
  const Matching& current_;
  Attitude attitude_;
  Strength strength_;
  bool corewise_;
  bool one_to_one_;
  int n_;
  int e_;
  std::vector<AgentMask> ends_;
  EdgeMask a_ = 0;
  std::vector<Ticks> before_;
};

}  // namespace

Ticks OneToOneReaction(const Game& game, const Matching& current,
                       const std::vector<char>& inside, int z,
                       Attitude attitude) {
  const std::vector<Ticks>& row = game.TicksFor(z);
  if (attitude == Attitude::kNeutral) {
    Ticks total = 0;
    for (Edge e : current) {
      if (!inside[static_cast<std::size_t>(game.ManAgent(e.man))] &&
          !inside[static_cast<std::size_t>(game.WomanAgent(e.woman))]) {
        total += row[static_cast<std::size_t>(game.EdgeIndex(e))];
      }
    }
    return total;
  }
  std::vector<int> men;
  std::vector<int> women;
  for (int m = 0; m < game.num_men(); ++m) {
    if (!inside[static_cast<std::size_t>(game.ManAgent(m))]) men.push_back(m);
  }
  for (int w = 0; w < game.num_women(); ++w) {
    if (!inside[static_cast<std::size_t>(game.WomanAgent(w))]) women.push_back(w);
  }
  std::vector<Ticks> block;
  block.reserve(men.size() * women.size());
  for (int m : men) {
    for (int w : women) {
      const Ticks v = row[static_cast<std::size_t>(game.EdgeIndex({m, w}))];
      block.push_back(attitude == Attitude::kPessimistic ? -v : v);
    }
  }
  const int rows = static_cast<int>(men.size());
  const int cols = static_cast<int>(women.size());
  switch (attitude) {
    case Attitude::kOptimistic:
      return kernel::MaxWeightValue(block, rows, cols, true);
    case Attitude::kPessimistic:
      return -kernel::MaxWeightValue(block, rows, cols, true);
    case Attitude::kRestrictedPessimistic:
      return kernel::MinWeightMaxCardinalityValue(block, rows, cols);
    case Attitude::kNeutral:
      break;
  }
  return 0;
}

std::optional<BlockingCertificate> FindBlockingDeviation(
    const Game& game, const Matching& current, Attitude attitude,
    Strength strength, bool corewise, int max_coalition) {
  if (game.num_agents() > kMaxKernelAgents || game.num_edges() > kMaxKernelEdges) {
    throw GuardError("game too large for the blocking search kernel");
  }
  if (attitude == Attitude::kRestrictedPessimistic &&
      game.mode() != Mode::kOneToOne) {
    throw PreconditionError(
        "restricted-pessimistic estimates exist only in one-to-one games");
  }
  return Kernel(game, current, attitude, strength, corewise).Run(max_coalition);
}

}  // namespace extmatch::internal
