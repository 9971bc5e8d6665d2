#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symj/group.hpp"

namespace symj {

/// Cyclic group <a | a^n>; element i is a^i.
Group cyclic_group(int n, const std::string& letter = "a");

/// Element index is i * |B| + j for the pair (i, j).
Group direct_product(const Group& a, const Group& b, std::string label = {});

/// <a, b | a^m, b^n = a^c, b a b^-1 = a^r>. Element index is j * m + i for a^i b^j.
/// Throws NotAGroup when the parameters do not define a group of order m*n.
Group metacyclic_group(int m, int n, int r, int c, std::string label,
                       const std::string& a_letter = "a", const std::string& b_letter = "b");

/// N x| C_k where the generator b of C_k acts by b x b^-1 = action(x).
/// Element index is j * |N| + x for x b^j.
Group semidirect_with_cyclic(const Group& normal, int k, const std::vector<Elem>& action,
                             std::string label, const std::string& b_letter = "b");

struct CatalogOptions {
  int max_order = 16;
  bool include_trivial_group = false;
};

/// Every group of order <= 16 up to isomorphism (42 groups, 41 without C1), ordered by
/// order and then by a fixed listing. Throws std::invalid_argument for max_order > 16.
std::vector<GroupPtr> builtin_catalog(const CatalogOptions& options = {});

/// Catalog lookup by label ("C4", "D4", "Q8", "C2xD4", ...); nullptr when unknown.
GroupPtr catalog_group(const std::string& label);

}  // namespace symj
