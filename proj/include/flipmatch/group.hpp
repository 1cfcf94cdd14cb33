#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flipmatch/graph.hpp"

namespace flipmatch {

/// Finite group given by an explicit multiplication table.
/// Element indices are 0..order-1.
class GroupTable {
public:
    /// Validates identity laws and inverses; associativity is checked
    /// exhaustively for order <= 64 and on seeded random triples above.
    static GroupTable from_table(std::vector<std::vector<int>> mul, int identity);

    int order() const noexcept { return order_; }
    int identity() const noexcept { return identity_; }
    int mul(int x, int y) const { return mul_.at(x).at(y); }
    int inverse(int x) const { return inv_.at(x); }

private:
    GroupTable() = default;

    int order_ = 0;
    int identity_ = 0;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
};

GroupTable cyclic_group(int n);

/// Direct product of cyclic groups Z_{n0} x Z_{n1} x ...; the element with
/// coordinates (c0, c1, ...) has index c0 + n0*c1 + n0*n1*c2 + ...
GroupTable product_of_cyclics(const std::vector<int>& orders);

/// Dihedral group of order 2n: indices 0..n-1 are rotations r^i,
/// n..2n-1 are reflections r^i s.
GroupTable dihedral_group(int n);

/// Symmetric group S_k for k <= 5, permutations in lexicographic order.
GroupTable symmetric_group(int k);

/// Builtin identifiers: "cyclic:n", "product:n0,n1,...", "dihedral:n",
/// "symmetric:k"; anything else is treated as a file path.
GroupTable load_group(const std::string& source);

/// File format: first line "order identity"; then `order` rows of `order`
/// integers, row x listing x*y for y = 0..order-1.
GroupTable read_group(std::istream& in);
void write_group(const GroupTable& table, std::ostream& out);

/// Generating set for a Cayley graph. Must be inverse-closed and must not
/// contain the identity.
struct GeneratorSet {
    std::vector<int> elements; // sorted, unique
};

GeneratorSet make_generator_set(const GroupTable& table, std::vector<int> elements);

/// Right Cayley graph: vertices are group elements, edges {x, x*s} for s in S.
/// Always |S|-regular and simple. Throws if S contains the identity or is not
/// inverse-closed; `generates` (when non-null) is set to whether the graph
/// came out connected, which callers may downgrade to a warning.
Graph cayley_graph(const GroupTable& table, const GeneratorSet& S,
                   bool* generates = nullptr);

} // namespace flipmatch
