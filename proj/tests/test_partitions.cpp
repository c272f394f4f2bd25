#include <doctest.h>

#include <functional>
#include <set>

#include "partitions.hpp"

using namespace hclab;

namespace {

// Backtracking count of standard shifted fillings, independent of the library.
uint64_t brute_count(const Partition& p) {
  std::vector<int> filled(p.size(), 0);
  const int n = size(p);
  std::function<uint64_t(int)> rec = [&](int placed) -> uint64_t {
    if (placed == n) return 1;
    uint64_t total = 0;
    for (size_t r = 0; r < p.size(); ++r) {
      if (filled[r] == p[r]) continue;
      // Next cell of row r sits at shifted column r + filled[r]; the cell above must be filled.
      const int col = static_cast<int>(r) + filled[r];
      if (r > 0 && static_cast<int>(r - 1) + filled[r - 1] <= col) continue;
      ++filled[r];
      total += rec(placed + 1);
      --filled[r];
    }
    return total;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("strict partitions") {
  CHECK(strict_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(strict_partitions(3) == std::vector<Partition>{{3}, {2, 1}});
  CHECK(strict_partitions(10).size() == 10);
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : strict_partitions(n)) {
      CHECK(is_strict(p));
      CHECK(size(p) == n);
    }
}

TEST_CASE("restricted partitions") {
  CHECK_FALSE(is_restricted({3}, 3, 3));
  CHECK(is_restricted({2, 1}, 3, 3));
  CHECK(is_restricted({}, 3, 3));
}

TEST_CASE("classification index examples") {
  CHECK(classification_index(3, 3, Family::CSP) == std::vector<Partition>{{2, 1}});
  CHECK(classification_index(3, 4, Family::CSP) == std::vector<Partition>{{2, 1}});
  CHECK(classification_index(4, 4, Family::CSP2) == std::vector<Partition>{{2, 2}});
  CHECK(classification_index(0, 5, Family::CSP).empty());
}

TEST_CASE("CSP lies inside RP or DRP") {
  for (int h : {3, 5, 7}) {
    for (int n = 0; n <= 8; ++n) {
      auto rp = classification_index(n, h, Family::RP);
      std::set<Partition> rps(rp.begin(), rp.end());
      for (const auto& xi : classification_index(n, h, Family::CSP)) CHECK(rps.count(xi));
      CHECK((classification_index(n, h, Family::CSP) == rp) == (h >= n));
    }
  }
  for (int h : {4, 6, 8}) {
    for (int n = 0; n <= 8; ++n) {
      auto drp = classification_index(n, h, Family::DRP);
      std::set<Partition> s(drp.begin(), drp.end());
      for (const auto& xi : classification_index(n, h, Family::CSP)) CHECK(s.count(xi));
      CHECK((classification_index(n, h, Family::CSP) == drp) == (h >= 2 * n));
    }
  }
}

TEST_CASE("shifted hooks") {
  CHECK(shifted_hook({7, 5, 3, 2}, {1, 2}) == 10);
  CHECK(shifted_hook({7, 5, 3, 2}, {1, 4}) == 7);
  CHECK(shifted_hook({1}, {1, 1}) == 1);
  CHECK(shifted_hook({2, 1}, {1, 1}) == 3);
  CHECK(shifted_hook({2, 1}, {1, 2}) == 2);
  CHECK(shifted_hook({2, 1}, {2, 2}) == 1);
}

TEST_CASE("hook formula agrees with backtracking for n <= 10") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : strict_partitions(n)) {
      CHECK(count_std_shifted(p) == brute_count(p));
      CHECK(std_tableaux(p).size() == count_std_shifted(p));
    }
  CHECK(count_std_shifted({2, 1}) == 1);
  CHECK(count_std_shifted({3, 2}) == 2);
  CHECK(count_std_shifted({6}) == 1);
}

TEST_CASE("sum of 2^(n - l) (#Std)^2 is n!") {
  for (int n = 0; n <= 10; ++n) {
    uint64_t s = 0;
    for (const auto& p : strict_partitions(n)) {
      const uint64_t c = count_std_shifted(p);
      s += (uint64_t{1} << (n - p.size())) * c * c;
    }
    CHECK(s == factorial(n));
  }
}

TEST_CASE("tableaux") {
  CHECK(std_tableaux({2, 1}).size() == 1);
  CHECK(std_tableaux({3, 1}).size() == 2);
  auto all = std_tableaux({4, 1});
  auto restricted = std_tableaux({4, 1}, 5);
  CHECK(restricted.size() < all.size());
  for (const auto& t : restricted) CHECK(is_standard(t));
}

TEST_CASE("residues") {
  CHECK(residue_of_offset(0, 5) == 0);
  std::vector<int> row6, row5;
  for (int c = 0; c < 5; ++c) row6.push_back(residue_of_offset(c, 6));
  for (int c = 0; c < 4; ++c) row5.push_back(residue_of_offset(c, 5));
  CHECK(row6 == std::vector<int>{0, 1, 2, 2, 1});
  CHECK(row5 == std::vector<int>{0, 1, 2, 1});
  CHECK(residue_sequence(std_tableaux({2, 1}).front(), 5) == std::vector<int>{0, 1, 0});
  CHECK(residue_sequence(std_tableaux({1}).front(), 5) == std::vector<int>{0});
  bool found = false;
  for (const auto& t : std_tableaux({3, 2}))
    if (residue_sequence(t, 6) == std::vector<int>{0, 1, 2, 0, 1}) found = true;
  CHECK(found);
}

TEST_CASE("gamma0") {
  CHECK(gamma0({2, 1}, 4) == 3);
  CHECK(gamma0({3, 2}, 6) == 3);
  for (int n = 1; n <= 6; ++n)
    for (const auto& xi : classification_index(n, 5, Family::CSP)) CHECK(gamma0(xi, 5) == static_cast<int>(xi.size()));
  CHECK(gamma0({}, 5) == 0);
}

TEST_CASE("gamma0 counts special residues along every standard tableau") {
  for (int h : {3, 5, 7, 4, 6}) {
    for (int n = 1; n <= 6; ++n)
      for (const auto& xi : classification_index(n, h, Family::CSP)) {
        if (!is_strict(xi)) continue;
        const std::optional<int> filt = h % 2 ? std::optional<int>(h) : std::nullopt;
        for (const auto& t : std_tableaux(xi, filt)) {
          const auto seq = residue_sequence(t, h);
          int special = 0;
          for (int r : seq) special += (r == 0 || (h % 2 == 0 && r == h / 2 - 1));
          CHECK(special == gamma0(xi, h));
        }
      }
  }
}

TEST_CASE("bh parity") {
  CHECK_FALSE(bh_parity_odd({4, 1}, 3));
  CHECK(bh_parity_odd({3, 2}, 3));
  CHECK_FALSE(bh_parity_odd({}, 3));
}
