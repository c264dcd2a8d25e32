// Copyright 2026 The ckah authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ckah/downward_closure.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>

namespace ckah {
namespace {

void AddSplit(std::set<std::pair<std::string, std::string>>& seen,
              std::vector<DownSetSplit>& out, Pomset lower, Pomset upper) {
  if (seen.emplace(lower.key(), upper.key()).second) {
    out.push_back({std::move(lower), std::move(upper)});
  }
}

std::vector<Pomset> Slice(std::span<const Pomset> parts, size_t begin, size_t end) {
  return std::vector<Pomset>(parts.begin() + begin, parts.begin() + end);
}

}  // namespace

std::vector<std::string> LabelMultiset(const Pomset& u) {
  std::vector<std::string> out;
  for (const Label& l : u.Leaves()) out.push_back(l.name());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DownSetSplit> DownSetSplits(const Pomset& u) {
  std::vector<DownSetSplit> out;
  std::set<std::pair<std::string, std::string>> seen;
  switch (u.kind()) {
    case Pomset::Kind::kEmpty:
      out.push_back({u, u});
      return out;
    case Pomset::Kind::kPrim:
      out.push_back({Pomset(), u});
      out.push_back({u, Pomset()});
      return out;
    case Pomset::Kind::kSeq: {
      const auto parts = u.children();
      AddSplit(seen, out, Pomset(), u);
      for (size_t j = 0; j < parts.size(); ++j) {
        std::vector<Pomset> before = Slice(parts, 0, j);
        std::vector<Pomset> after = Slice(parts, j + 1, parts.size());
        for (DownSetSplit& s : DownSetSplits(parts[j])) {
          if (s.lower.is_empty()) continue;
          std::vector<Pomset> lower = before;
          lower.push_back(s.lower);
          std::vector<Pomset> upper = {s.upper};
          upper.insert(upper.end(), after.begin(), after.end());
          AddSplit(seen, out, SeqAll(lower), SeqAll(upper));
        }
      }
      return out;
    }
    case Pomset::Kind::kPar: {
      std::vector<std::pair<std::vector<Pomset>, std::vector<Pomset>>> partial = {{}};
      for (const Pomset& c : u.children()) {
        std::vector<DownSetSplit> splits = DownSetSplits(c);
        std::vector<std::pair<std::vector<Pomset>, std::vector<Pomset>>> next;
        for (const auto& [lo, hi] : partial) {
          for (const DownSetSplit& s : splits) {
            auto l = lo;
            auto h = hi;
            l.push_back(s.lower);
            h.push_back(s.upper);
            next.emplace_back(std::move(l), std::move(h));
          }
        }
        partial = std::move(next);
      }
      for (const auto& [lo, hi] : partial) AddSplit(seen, out, ParAll(lo), ParAll(hi));
      return out;
    }
  }
  return out;
}

const std::vector<DownSetSplit>& DownwardClosureCache::Splits(const Pomset& v) {
  auto it = splits_.find(v.key());
  if (it != splits_.end()) return it->second;
  return splits_.emplace(v.key(), DownSetSplits(v)).first->second;
}

const PomsetLanguage& DownwardClosureCache::Closure(const Pomset& v) {
  auto it = closures_.find(v.key());
  if (it != closures_.end()) return it->second;
  PomsetLanguage result;
  switch (v.kind()) {
    case Pomset::Kind::kEmpty:
    case Pomset::Kind::kPrim:
      result.Insert(v);
      break;
    case Pomset::Kind::kSeq: {
      result.Insert(Pomset());
      for (const Pomset& c : v.children()) result = LangSeq(result, Closure(c));
      break;
    }
    case Pomset::Kind::kPar:
      result = ParClosure(v);
      break;
  }
  return closures_.emplace(v.key(), std::move(result)).first->second;
}

// Members of ↓v whose top-level shape is sequential: split v along a
// non-trivial down-set and close both halves independently.
PomsetLanguage DownwardClosureCache::SequentialPart(const Pomset& v) {
  PomsetLanguage out;
  const std::vector<DownSetSplit> splits = Splits(v);
  for (const DownSetSplit& s : splits) {
    if (s.lower.is_empty() || s.upper.is_empty()) continue;
    out.InsertAll(LangSeq(Closure(s.lower), Closure(s.upper)));
  }
  return out;
}

// Every member of ↓v is either sequential or a parallel composition whose
// component holding the first factor c1 is built from a group G of v's
// factors (G ∋ c1, G ≠ all).
PomsetLanguage DownwardClosureCache::ParClosure(const Pomset& v) {
  const std::vector<Pomset> parts(v.children().begin(), v.children().end());
  const int rest = static_cast<int>(parts.size()) - 1;
  PomsetLanguage out = SequentialPart(v);
  const uint64_t all = (uint64_t{1} << rest) - 1;
  for (uint64_t mask = 0; mask < all; ++mask) {
    std::vector<Pomset> group = {parts[0]};
    std::vector<Pomset> others;
    for (int i = 0; i < rest; ++i) {
      ((mask >> i) & 1 ? group : others).push_back(parts[i + 1]);
    }
    PomsetLanguage connected;
    for (const Pomset& x : Closure(ParAll(group))) {
      if (x.kind() != Pomset::Kind::kPar) connected.Insert(x);
    }
    out.InsertAll(LangPar(connected, Closure(ParAll(others))));
  }
  return out;
}

bool DownwardClosureCache::Subsumes(const Pomset& v, const Pomset& u) {
  if (v.size() != u.size()) return false;
  if (v == u) return true;
  const std::string memo_key = v.key() + '\x01' + u.key();
  if (auto it = subsumes_.find(memo_key); it != subsumes_.end()) return it->second;

  bool result = false;
  if (LabelMultiset(v) == LabelMultiset(u)) {
    switch (u.kind()) {
      case Pomset::Kind::kEmpty:
      case Pomset::Kind::kPrim:
        break;  // equality already tested
      case Pomset::Kind::kSeq: {
        const auto parts = u.children();
        const Pomset head = parts[0];
        const Pomset tail = SeqAll(Slice(parts, 1, parts.size()));
        for (const DownSetSplit& s : Splits(v)) {
          if (s.lower.size() != head.size()) continue;
          if (Subsumes(s.lower, head) && Subsumes(s.upper, tail)) {
            result = true;
            break;
          }
        }
        break;
      }
      case Pomset::Kind::kPar: {
        // Each factor of v must land inside a single factor of u.
        const std::vector<Pomset> targets = u.ParComponents();
        const std::vector<Pomset> sources = v.ParComponents();
        const int m = static_cast<int>(sources.size());
        auto assign = [&](auto&& self, size_t i, uint64_t free) -> bool {
          if (i == targets.size()) return free == 0;
          const Pomset& x = targets[i];
          for (uint64_t s = free; s; s = (s - 1) & free) {
            std::vector<Pomset> group;
            int size = 0;
            for (int j = 0; j < m; ++j) {
              if ((s >> j) & 1) {
                group.push_back(sources[j]);
                size += sources[j].size();
              }
            }
            if (size != x.size()) continue;
            if (Subsumes(ParAll(group), x) && self(self, i + 1, free & ~s)) return true;
          }
          return false;
        };
        if (targets.size() <= sources.size()) {
          result = assign(assign, 0, (uint64_t{1} << m) - 1);
        }
        break;
      }
    }
  }
  subsumes_.emplace(memo_key, result);
  return result;
}

namespace {

class PosetClosure {
 public:
  explicit PosetClosure(const LabelledPoset& p) : p_(p) {}

  const PomsetLanguage& Closure(uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    PomsetLanguage out;
    const int count = std::popcount(mask);
    if (count == 0) {
      out.Insert(Pomset());
    } else if (count == 1) {
      out.Insert(Pomset::Prim(p_.label(std::countr_zero(mask))));
    } else {
      out = Sequential(mask);
      const std::vector<uint64_t> parts = Components(mask);
      const int rest = static_cast<int>(parts.size()) - 1;
      for (uint64_t choice = 0; rest > 0 && choice + 1 < (uint64_t{1} << rest); ++choice) {
        uint64_t group = parts[0], others = 0;
        for (int i = 0; i < rest; ++i) ((choice >> i) & 1 ? group : others) |= parts[i + 1];
        PomsetLanguage connected;
        for (const Pomset& x : Closure(group)) {
          if (x.kind() != Pomset::Kind::kPar) connected.Insert(x);
        }
        out.InsertAll(LangPar(connected, Closure(others)));
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

 private:
  PomsetLanguage Sequential(uint64_t mask) {
    PomsetLanguage out;
    // Proper nonempty down-sets of the restriction to `mask`.
    for (uint64_t lower = (mask - 1) & mask; lower; lower = (lower - 1) & mask) {
      bool down_closed = true;
      for (uint64_t l = lower; l && down_closed; l &= l - 1) {
        down_closed = (p_.DownSet(std::countr_zero(l)) & mask & ~lower) == 0;
      }
      if (down_closed) out.InsertAll(LangSeq(Closure(lower), Closure(mask & ~lower)));
    }
    return out;
  }

  std::vector<uint64_t> Components(uint64_t mask) const {
    std::vector<uint64_t> out;
    while (mask) {
      uint64_t component = 0;
      uint64_t frontier = mask & (~mask + 1);
      while (frontier) {
        component |= frontier;
        uint64_t next = 0;
        for (uint64_t f = frontier; f; f &= f - 1) {
          const int x = std::countr_zero(f);
          next |= p_.UpSet(x) | p_.DownSet(x);
        }
        frontier = next & mask & ~component;
      }
      out.push_back(component);
      mask &= ~component;
    }
    return out;
  }

  const LabelledPoset& p_;
  std::unordered_map<uint64_t, PomsetLanguage> memo_;
};

}  // namespace

PomsetLanguage SpDownwardClosure(const LabelledPoset& p) {
  PosetClosure closure(p);
  const uint64_t all = p.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << p.size()) - 1;
  return closure.Closure(all);
}

PomsetLanguage DownwardClosure(const Pomset& v) {
  DownwardClosureCache cache;
  return cache.Closure(v);
}

bool SubsumesStructural(const Pomset& v, const Pomset& u) {
  DownwardClosureCache cache;
  return cache.Subsumes(v, u);
}

}  // namespace ckah
