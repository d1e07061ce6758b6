#pragma once

#include <map>
#include <string>
#include <vector>

#include "decem/simplicial_complex.hpp"
#include "decem/types.hpp"

namespace decem {

// Gmsh MSH 4.1 ASCII subset: $MeshFormat, optional $PhysicalNames, $Nodes,
// $Elements with type-4 (4-node tet) blocks. Other element types are skipped
// and counted; nodes used only by skipped elements are dropped.
struct MshImport {
    SimplicialComplex complex;
    std::vector<int> tet_tags; // entity tag of the element block, per tet
    std::map<int, std::string> physical_names;
    int ignored_elements = 0;
};

// Throws UnsupportedVersion, MalformedSection (naming the section), NoTets.
MshImport import_msh(const std::string& path);

// Writes the same subset back out (one volume entity per distinct tag).
void export_msh(const SimplicialComplex& complex, const std::vector<int>& tet_tags,
                const std::string& path);

} // namespace decem
