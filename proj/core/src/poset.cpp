#include "gcdt/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gcdt {

MeetSemilattice MeetSemilattice::build(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& order_pairs) {
  MeetSemilattice l;
  l.labels_ = std::move(elements);
  if (l.labels_.empty()) throw std::invalid_argument("lattice with no elements");
  for (std::size_t i = 0; i < l.labels_.size(); ++i) {
    if (!l.index_.emplace(l.labels_[i], i).second) {
      throw std::invalid_argument("duplicate lattice element '" + l.labels_[i] + "'");
    }
  }
  const std::size_t n = l.labels_.size();
  l.below_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) l.below_[i][i] = true;
  for (const auto& [a, b] : order_pairs) {
    l.below_[l.index_of(a)][l.index_of(b)] = true;
  }

  // transitive closure (Warshall)
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!l.below_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (l.below_[k][j]) l.below_[i][j] = true;
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (l.below_[i][j] && l.below_[j][i]) {
        throw std::invalid_argument("not a partial order: antisymmetry fails for ('" +
                                    l.labels_[i] + "', '" + l.labels_[j] + "')");
      }
    }

  // unique greatest common lower bound for every pair
  l.meet_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::vector<std::size_t> lower;
      for (std::size_t w = 0; w < n; ++w) {
        if (l.below_[w][a] && l.below_[w][b]) lower.push_back(w);
      }
      if (lower.empty()) {
        throw std::invalid_argument("not a meet semilattice: ('" + l.labels_[a] + "', '" +
                                    l.labels_[b] + "') has no common lower bound");
      }
      std::size_t greatest = n;
      for (std::size_t w : lower) {
        bool tops_all = true;
        for (std::size_t z : lower) {
          if (!l.below_[z][w]) {
            tops_all = false;
            break;
          }
        }
        if (tops_all) {
          greatest = w;
          break;  // antisymmetry makes the greatest lower bound unique
        }
      }
      if (greatest == n) {
        throw std::invalid_argument("not a meet semilattice: ('" + l.labels_[a] + "', '" +
                                    l.labels_[b] + "') has no greatest common lower bound");
      }
      l.meet_[a][b] = l.meet_[b][a] = greatest;
    }
  return l;
}

MeetSemilattice MeetSemilattice::divisibility(const IntegerSet& values) {
  std::vector<std::string> labels;
  labels.reserve(values.size());
  for (std::uint64_t v : values) labels.push_back(std::to_string(v));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::uint64_t a : values)
    for (std::uint64_t b : values) {
      if (a != b && b % a == 0) pairs.emplace_back(std::to_string(a), std::to_string(b));
    }
  return build(std::move(labels), pairs);
}

std::size_t MeetSemilattice::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::invalid_argument("unknown lattice element '" + label + "'");
  return it->second;
}

std::vector<std::size_t> MeetSemilattice::indices_of(const std::vector<std::string>& subset) const {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  std::set<std::size_t> seen;
  for (const std::string& s : subset) {
    const std::size_t i = index_of(s);
    if (!seen.insert(i).second) {
      throw std::invalid_argument("duplicate subset element '" + s + "'");
    }
    idx.push_back(i);
  }
  return idx;
}

std::string MeetSemilattice::meet_many(const std::vector<std::string>& items) const {
  if (items.empty()) throw std::invalid_argument("meet of an empty list");
  std::size_t acc = index_of(items.front());
  for (std::size_t i = 1; i < items.size(); ++i) acc = meet_[acc][index_of(items[i])];
  return labels_[acc];
}

std::vector<std::string> MeetSemilattice::meet_closure(const std::vector<std::string>& subset) const {
  std::vector<std::size_t> idx = indices_of(subset);
  std::set<std::size_t> members(idx.begin(), idx.end());
  // fixpoint under pairwise meets; new elements appended in declaration order
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> snapshot(idx);
    for (std::size_t a : snapshot)
      for (std::size_t b : snapshot) {
        const std::size_t w = meet_[a][b];
        if (members.insert(w).second) {
          idx.push_back(w);
          grew = true;
        }
      }
    if (grew) {
      std::sort(idx.begin() + static_cast<std::ptrdiff_t>(snapshot.size()), idx.end());
    }
  }
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(labels_[i]);
  return out;
}

bool MeetSemilattice::is_meet_closed(const std::vector<std::string>& subset) const {
  std::vector<std::size_t> idx = indices_of(subset);
  std::set<std::size_t> members(idx.begin(), idx.end());
  for (std::size_t a : idx)
    for (std::size_t b : idx) {
      if (!members.count(meet_[a][b])) return false;
    }
  return true;
}

namespace {

void require_meet_closed(const MeetSemilattice& l, const std::vector<std::size_t>& idx,
                         const char* what) {
  std::set<std::size_t> members(idx.begin(), idx.end());
  for (std::size_t a : idx)
    for (std::size_t b : idx) {
      const std::size_t w = l.meet(a, b);
      if (!members.count(w)) {
        throw std::invalid_argument(std::string(what) + " not meet-closed: meet('" + l.label(a) +
                                    "', '" + l.label(b) + "') = '" + l.label(w) +
                                    "' is missing");
      }
    }
}

template <typename T>
T valuation_at(const Valuation<T>& g, const std::string& label) {
  auto it = g.find(label);
  if (it == g.end()) {
    throw std::invalid_argument("valuation undefined on element '" + label + "'");
  }
  return it->second;
}

}  // namespace

template <typename T>
PosetTotientTable<T> poset_totient(const MeetSemilattice& l, const std::vector<std::string>& s,
                                   const Valuation<T>& g) {
  if (s.empty()) throw std::invalid_argument("totient table of an empty subset");
  const std::vector<std::size_t> idx = l.indices_of(s);
  const std::size_t n = idx.size();

  // topological pass over the subset: an element is ready once everything
  // strictly below it (within the subset) is resolved; input order breaks ties
  std::vector<T> psi(n, T(0));
  std::vector<bool> done(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      bool ready = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || done[j]) continue;
        if (l.below(idx[j], idx[i])) {
          ready = false;
          break;
        }
      }
      if (ready) {
        pick = i;
        break;
      }
    }
    if (pick == n) throw std::logic_error("poset totient: no ready element");  // unreachable
    T val = valuation_at(g, s[pick]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != pick && done[j] && l.below(idx[j], idx[pick])) val -= psi[j];
    }
    psi[pick] = val;
    done[pick] = true;
  }
  return PosetTotientTable<T>{s, std::move(psi)};
}

template PosetTotientTable<BigRat> poset_totient(const MeetSemilattice&,
                                                 const std::vector<std::string>&,
                                                 const Valuation<BigRat>&);
template PosetTotientTable<double> poset_totient(const MeetSemilattice&,
                                                 const std::vector<std::string>&,
                                                 const Valuation<double>&);

template <typename T>
Tensor<T> build_meet_tensor(const MeetSemilattice& l, const std::vector<std::string>& s,
                            const Valuation<T>& g, std::size_t order) {
  if (order < 2) throw std::invalid_argument("meet tensor needs order at least 2");
  const std::vector<std::size_t> idx = l.indices_of(s);
  // g looked up once per lattice element that can appear as a meet
  std::vector<T> gval;
  gval.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) gval.push_back(T(0));
  std::vector<bool> gknown(l.size(), false);

  Tensor<T> out = Tensor<T>::cubic(order, idx.size());
  std::vector<std::size_t> mi(order, 0);
  std::size_t flat = 0;
  do {
    std::size_t acc = idx[mi[0]];
    for (std::size_t k = 1; k < order; ++k) acc = l.meet(acc, idx[mi[k]]);
    if (!gknown[acc]) {
      gval[acc] = valuation_at(g, l.label(acc));
      gknown[acc] = true;
    }
    out[flat++] = gval[acc];
  } while (next_index(mi, out.shape()));
  return out;
}

template Tensor<BigRat> build_meet_tensor(const MeetSemilattice&, const std::vector<std::string>&,
                                          const Valuation<BigRat>&, std::size_t);
template Tensor<double> build_meet_tensor(const MeetSemilattice&, const std::vector<std::string>&,
                                          const Valuation<double>&, std::size_t);

template <typename T>
MeetFactorization<T> meet_decompose_factorize(const MeetSemilattice& l,
                                              const std::vector<std::string>& s,
                                              const Valuation<T>& g, std::size_t order,
                                              const std::vector<std::string>& f) {
  if (order < 2) throw std::invalid_argument("decomposition needs order at least 2");
  const std::vector<std::size_t> sidx = l.indices_of(s);
  const std::vector<std::size_t> fidx = l.indices_of(f);
  for (std::size_t i : sidx) {
    if (std::find(fidx.begin(), fidx.end(), i) == fidx.end()) {
      throw std::invalid_argument("superset must contain the subset: '" + l.label(i) +
                                  "' is missing");
    }
  }
  require_meet_closed(l, fidx, "superset");

  PosetTotientTable<T> psi = poset_totient(l, f, g);

  MeetFactorization<T> out;
  out.closure = f;
  out.incidence = Matrix<BigInt>(sidx.size(), fidx.size());
  for (std::size_t i = 0; i < sidx.size(); ++i)
    for (std::size_t j = 0; j < fidx.size(); ++j) {
      out.incidence(i, j) = l.below(fidx[j], sidx[i]) ? 1 : 0;
    }

  out.identity.order = order;
  out.identity.dim = sidx.size();
  out.identity.scheme = WeightScheme{SchemeKind::meet_totient, "", 0.0};
  out.identity.weights = psi.values;
  out.identity.vectors.assign(fidx.size(), std::vector<int>(sidx.size(), 0));
  for (std::size_t j = 0; j < fidx.size(); ++j)
    for (std::size_t i = 0; i < sidx.size(); ++i) {
      out.identity.vectors[j][i] = (out.incidence(i, j) != 0) ? 1 : 0;
    }
  for (const T& w : psi.values) {
    if (!(w > T(0))) {
      out.identity.weights_positive = false;
      break;
    }
  }
  out.diagonal = make_diagonal(psi.values, order);
  return out;
}

template MeetFactorization<BigRat> meet_decompose_factorize(const MeetSemilattice&,
                                                            const std::vector<std::string>&,
                                                            const Valuation<BigRat>&, std::size_t,
                                                            const std::vector<std::string>&);
template MeetFactorization<double> meet_decompose_factorize(const MeetSemilattice&,
                                                            const std::vector<std::string>&,
                                                            const Valuation<double>&, std::size_t,
                                                            const std::vector<std::string>&);

DetReport det_closed_form_meet(const MeetSemilattice& l, const std::vector<std::string>& s,
                               const Valuation<BigRat>& g, std::size_t order) {
  if (order < 2) throw std::invalid_argument("determinant needs order at least 2");
  const std::vector<std::size_t> idx = l.indices_of(s);
  require_meet_closed(l, idx, "subset");
  PosetTotientTable<BigRat> psi = poset_totient(l, s, g);
  return make_closed_form_report(std::move(psi.values), order, s.size(),
                                 DetMethod::closed_form_psi);
}

}  // namespace gcdt
