#ifndef SMORDER_FAMILIES_HPP
#define SMORDER_FAMILIES_HPP

#include <span>

#include "smorder/graph.hpp"

namespace smorder {

// Named extremal constructions. Labeling convention: clique/cycle vertices
// first with the attachment vertex at label 0, pendants and path vertices
// appended in order, so a given parameter set always yields the identical
// labeled graph. Infeasible parameters throw std::invalid_argument naming
// the violated predicate.

// K_n^k: clique K_{n-k} with k pendant vertices on one clique vertex.
// K_n^0 = K_n, K_n^{n-1} = K_{1,n-1}.
Graph knk(int n, int k);

// P_n^k: cycle C_{n-k} with a pendant path of k edges (lollipop).
// Requires n-k >= 3. P_n^0 = C_n.
Graph pnk(int n, int k);

// K(a_0,{a_1,...,a_k}): hub clique K_{a0} joined by one star edge to a
// designated vertex of each K_{a_i}.
Graph star_of_cliques(int a0, std::span<const int> parts);
Graph star_of_cliques(int a0, std::initializer_list<int> parts);

// K_n minus one edge.
Graph g1(int n);

// K_n^1 minus a clique edge vertex-disjoint from the cut edge (n >= 5).
Graph g2(int n);

// K_n^k with one pendant moved from the attachment vertex to another
// clique vertex (k >= 2, n-k >= 3).
Graph g3(int n, int k);

// K*_{1,n-1}: star with one leaf grown into a 2-path (n >= 3).
Graph star_plus(int n);

// U-hat_n^k: P_{n-2}^{k-2} with two extra leaves on its pendant endpoint
// (k >= 3, n-k >= 3).
Graph uhat(int n, int k);

// U_n^g: unicyclic, cycle C_g plus pendant path; alias of pnk(n, n-g).
Graph ung(int n, int g);

}  // namespace smorder

#endif
