#pragma once

#include <string>
#include <vector>

#include "regset/group.hpp"

namespace regset {

struct CatalogEntry {
  std::string id;           // builtin spec, e.g. "gendihedral:2x4", or "file:<name>"
  std::string description;  // human-readable recipe
  GroupTable table;
  // Recipes that produced this exact table and were deduplicated into this
  // entry (e.g. the generalized dihedral group over an elementary abelian
  // 2-group is the table of a plain direct power of Z2).
  std::vector<std::string> aliases;

  bool matches_recipe(const std::string& prefix) const;
};

// Deterministic list of group tables up to the given order: cyclic groups,
// abelian groups as products of cyclic prime-power factors, generalized
// dihedral groups over those, dicyclic groups, semidirect products
// Z_q : Z_k for prime q and k | q-1, small alternating/symmetric groups,
// plus every group file found in extra_dir (sorted by filename). Entries
// with byte-identical tables are removed; isomorphic but distinct
// constructions are retained.
std::vector<CatalogEntry> catalog(int max_order, const std::string& extra_dir = "");

// Builds a group from a builtin spec ("cyclic:6", "abelian:2x3",
// "gendihedral:4", "dihedral:4", "dicyclic:2", "semidirect:7x3",
// "symmetric:4", "alternating:4") or, failing that, parses it as a file path.
GroupTable group_from_spec(const std::string& spec);

// Reference counts of groups per order up to 40, for honest coverage
// reporting; 0 when unknown.
int known_group_count(int order);

}  // namespace regset
