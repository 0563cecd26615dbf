#include "chaingeo/chain_geometry.hpp"

#include <algorithm>
#include <set>

namespace chaingeo {

bool Chain::contains(const ProjPoint& p) const { return std::binary_search(points.begin(), points.end(), p); }

namespace {

ProjPoint canonical_point(const FiniteRing& R, Elem a, Elem b) {
  const auto [ca, cb] = canonical_pair(R, a, b);
  return {R.id(), ca, cb};
}

std::pair<Elem, Elem> row_times(const FiniteRing& R, Elem x, Elem y, const Matrix2& m) {
  return {R.add(R.mul(x, m.a), R.mul(y, m.c)), R.add(R.mul(x, m.b), R.mul(y, m.d))};
}

}  // namespace

Chain chain_image(const FiniteRing& R, const Matrix2& m) {
  const auto& alg = R.require_algebra();
  Chain chain{{}, m};
  for (Elem k : alg.embed) {
    const auto [a, b] = row_times(R, R.one(), k, m);
    chain.points.push_back(canonical_point(R, a, b));
  }
  const auto [a, b] = row_times(R, R.zero(), R.one(), m);
  chain.points.push_back(canonical_point(R, a, b));
  std::sort(chain.points.begin(), chain.points.end());
  chain.points.erase(std::unique(chain.points.begin(), chain.points.end()), chain.points.end());
  if (chain.points.size() != alg.embed.size() + 1) throw Error(ErrorKind::Internal, "chain collapsed");
  return chain;
}

Chain standard_chain(const FiniteRing& R) { return chain_image(R, Matrix2::identity(R)); }

Chain chain_through(const FiniteRing& R, const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (!distant(R, p, q) || !distant(R, p, r) || !distant(R, q, r)) {
    throw Error(ErrorKind::NotDistant, "chain_through needs three mutually distant points");
  }
  const Matrix2 m{p.a, p.b, q.a, q.b};
  const auto m_inv = inverse(R, m);
  if (!m_inv) throw Error(ErrorKind::Internal, "distant points gave a singular matrix");
  const auto [x, y] = row_times(R, r.a, r.b, *m_inv);
  if (!R.is_unit(x) || !R.is_unit(y)) throw Error(ErrorKind::Internal, "coordinates of the third point are not units");
  const Matrix2 w{R.mul(x, p.a), R.mul(x, p.b), R.mul(y, q.a), R.mul(y, q.b)};
  return chain_image(R, w);
}

std::vector<int> chain_indices(const ProjectiveLine& line, const Chain& chain) {
  std::vector<int> out;
  for (const auto& p : chain.points) {
    const auto i = line.index_of(p);
    if (!i) throw Error(ErrorKind::Internal, "chain point missing from the projective line");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Chain> all_chains(const ProjectiveLine& line, const DistantGraph& g) {
  const FiniteRing& R = line.ring();
  R.require_algebra();
  const int n = line.size();
  if (n > kChainBudget) {
    throw Error(ErrorKind::Size, "chain enumeration is limited to " + std::to_string(kChainBudget) + " points");
  }
  std::vector<Chain> chains;
  std::vector<std::vector<int>> members;               // point indices per chain
  std::vector<std::vector<int>> by_pair(static_cast<std::size_t>(n) * n);  // chain ids through i < j
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!g.adjacent(i, k) || !g.adjacent(j, k)) continue;
        const auto& through = by_pair[static_cast<std::size_t>(i) * n + j];
        const bool covered = std::any_of(through.begin(), through.end(), [&](int c) {
          return std::binary_search(members[c].begin(), members[c].end(), k);
        });
        if (covered) continue;
        Chain c = chain_through(R, line.point(i), line.point(j), line.point(k));
        const int id = static_cast<int>(chains.size());
        members.push_back(chain_indices(line, c));
        for (std::size_t s = 0; s < members[id].size(); ++s) {
          for (std::size_t t = s + 1; t < members[id].size(); ++t) {
            by_pair[static_cast<std::size_t>(members[id][s]) * n + members[id][t]].push_back(id);
          }
        }
        chains.push_back(std::move(c));
      }
    }
  }
  std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) { return a.points < b.points; });
  return chains;
}

CrossRatio cross_ratio(const FiniteRing& R, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                       const ProjPoint& p4) {
  const Chain c = chain_through(R, p1, p2, p3);
  const auto w_inv = inverse(R, c.witness);
  if (!w_inv) throw Error(ErrorKind::Internal, "chain witness is not invertible");
  if (p4.ring_id != R.id()) throw Error(ErrorKind::RingMismatch, "point does not belong to " + R.name());
  const auto [a, b] = row_times(R, p4.a, p4.b, *w_inv);
  CrossRatio out;
  const auto b_inv = R.inverse(b);
  if (!b_inv) return out;
  out.affine = true;
  const Elem z = R.mul(a, *b_inv);
  std::set<Elem> cls;
  for (Elem u : R.units()) cls.insert(R.mul(R.mul(u, z), *R.inverse(u)));
  out.conjugacy_class.assign(cls.begin(), cls.end());
  return out;
}

bool meets_field(const FiniteRing& R, const CrossRatio& cr) {
  const auto& alg = R.require_algebra();
  return std::any_of(cr.conjugacy_class.begin(), cr.conjugacy_class.end(),
                     [&](Elem e) { return alg.field_preimage(e).has_value(); });
}

std::vector<ProjPoint> bartolone_points(const ProjectiveLine& line) {
  const FiniteRing& R = line.ring();
  std::vector<bool> hit(line.size(), false);
  for (int x = 0; x < R.size(); ++x) {
    for (int y = 0; y < R.size(); ++y) {
      const Elem a = R.sub(R.mul(x, y), R.one());
      const auto i = line.index_of_pair(a, static_cast<Elem>(x));
      if (!i) {
        throw Error(ErrorKind::Internal, "(xy-1, x) is not admissible for x = " + R.label(x) + ", y = " + R.label(y));
      }
      hit[*i] = true;
    }
  }
  std::vector<ProjPoint> out;
  for (int i = 0; i < line.size(); ++i) {
    if (hit[i]) out.push_back(line.point(i));
  }
  return out;
}

}  // namespace chaingeo
