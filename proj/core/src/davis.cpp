#include <algorithm>
#include <cmath>
#include <map>

#include "coxhyp/chamber.hpp"
#include "coxhyp/errors.hpp"

namespace coxhyp {

namespace {

using Key = std::vector<std::int64_t>;

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

Key grid_key(const Eigen::MatrixXd& m) {
  Key k(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    k[static_cast<std::size_t>(i)] = std::llround(m.data()[i] * 1e6);
  }
  return k;
}

}  // namespace

std::string word_to_string(const std::vector<std::size_t>& word,
                           const std::vector<std::string>& labels) {
  if (word.empty()) return "e";
  std::string s;
  for (auto i : word) s += i < labels.size() ? labels[i] : "s" + std::to_string(i + 1);
  return s;
}

DavisPoset enumerate_davis_cells(const CoxeterSystem& sys, std::size_t max_order) {
  const std::size_t n = sys.rank();
  if (n > 20) throw LimitError("rank too large for Davis cell enumeration");
  const auto cos = cosine_matrix(sys);
  if (classify(cos) != MatrixClass::PositiveDefinite) {
    throw DomainError("Davis cell enumeration needs a finite Coxeter system");
  }
  const auto N = static_cast<Eigen::Index>(n);

  // s_i(v) = v - 2 <e_i, v>_A e_i
  std::vector<Eigen::MatrixXd> gens;
  for (Eigen::Index i = 0; i < N; ++i) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(N, N);
    s.row(i) -= 2.0 * cos.values().row(i);
    gens.push_back(std::move(s));
  }

  // Breadth-first over right multiplication by generators in index order:
  // the first word reaching an element is its shortlex-minimal word.
  std::vector<Eigen::MatrixXd> elems{Eigen::MatrixXd::Identity(N, N)};
  std::vector<std::vector<std::size_t>> words{{}};
  std::map<Key, std::size_t> index{{grid_key(elems[0]), 0}};
  std::vector<std::vector<std::size_t>> right(1, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < elems.size(); ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      Eigen::MatrixXd prod = elems[g] * gens[i];
      auto key = grid_key(prod);
      auto it = index.find(key);
      if (it == index.end()) {
        if (elems.size() >= max_order) {
          throw LimitError("group has more than " + std::to_string(max_order) + " elements");
        }
        it = index.emplace(std::move(key), elems.size()).first;
        auto w = words[g];
        w.push_back(i);
        elems.push_back(std::move(prod));
        words.push_back(std::move(w));
        right.emplace_back(n);
      }
      right[g][i] = it->second;
    }
  }

  const std::size_t order = elems.size();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return shortlex_less(IndexSet::from_mask(a), IndexSet::from_mask(b));
  });

  DavisPoset poset;
  poset.group_order = order;
  std::map<std::uint64_t, std::vector<std::size_t>> cell_of;  // mask -> element -> cell id
  for (auto mask : masks) {
    const auto t = IndexSet::from_mask(mask);
    auto& owner = cell_of[mask];
    owner.assign(order, kUnassigned);
    for (std::size_t g = 0; g < order; ++g) {
      if (owner[g] != kUnassigned) continue;
      const std::size_t id = poset.cells.size();
      poset.cells.push_back({words[g], t, {}});
      std::vector<std::size_t> stack{g};
      owner[g] = id;
      while (!stack.empty()) {
        auto h = stack.back();
        stack.pop_back();
        for (auto s : t) {
          auto k = right[h][s];
          if (owner[k] == kUnassigned) {
            owner[k] = id;
            stack.push_back(k);
          }
        }
      }
    }
  }

  // Covers: w W_T is contained in w W_{T+s}.
  std::vector<std::size_t> rep_element(poset.cells.size());
  for (std::size_t g = 0; g < order; ++g) {
    for (auto mask : masks) {
      const auto id = cell_of[mask][g];
      if (poset.cells[id].word == words[g]) rep_element[id] = g;
    }
  }
  for (std::size_t id = 0; id < poset.cells.size(); ++id) {
    auto& cell = poset.cells[id];
    const auto mask = cell.subset.mask();
    for (std::size_t s = 0; s < n; ++s) {
      if (mask >> s & 1U) continue;
      cell.covers.push_back(cell_of[mask | (std::uint64_t{1} << s)][rep_element[id]]);
    }
  }
  return poset;
}

}  // namespace coxhyp
