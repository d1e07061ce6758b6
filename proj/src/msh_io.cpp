#include "decem/msh_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "decem/errors.hpp"

namespace decem {

namespace {
// Stream tokenizer that reports which section a premature EOF occurred in.
struct Tokens {
    std::istream& in;
    std::string section = "header";

    std::string next() {
        std::string t;
        if (!(in >> t))
            throw io_error("MalformedSection", "unexpected end of file in $" + section);
        return t;
    }
    long long next_int() {
        const std::string t = next();
        try {
            return std::stoll(t);
        } catch (...) {
            throw io_error("MalformedSection", "expected integer in $" + section + ", got '" + t + "'");
        }
    }
    double next_double() {
        const std::string t = next();
        try {
            return std::stod(t);
        } catch (...) {
            throw io_error("MalformedSection", "expected number in $" + section + ", got '" + t + "'");
        }
    }
    void expect(const std::string& lit) {
        const std::string t = next();
        if (t != lit)
            throw io_error("MalformedSection", "expected '" + lit + "' in $" + section + ", got '" + t + "'");
    }
    void skip_to_end() {
        const std::string end = "$End" + section;
        std::string t;
        while (in >> t)
            if (t == end) return;
        throw io_error("MalformedSection", "missing " + end);
    }
};
} // namespace

MshImport import_msh(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw io_error("IoFailure", "cannot open " + path);

    Tokens tok{file};
    MshImport out;

    std::map<long long, int> node_of_tag; // msh tag -> dense parse index
    std::vector<Vec3> coords;
    std::vector<std::array<long long, 4>> tet_tags_raw;
    std::vector<int> block_tags;
    bool saw_nodes = false, saw_elements = false;

    std::string t;
    while (file >> t) {
        if (t == "$MeshFormat") {
            tok.section = "MeshFormat";
            const std::string version = tok.next();
            const long long file_type = tok.next_int();
            tok.next_int(); // data size
            if (version != "4.1")
                throw io_error("UnsupportedVersion", "MSH version " + version + " (need 4.1 ASCII)");
            if (file_type != 0)
                throw io_error("UnsupportedVersion", "binary MSH files are not supported");
            tok.expect("$EndMeshFormat");
        } else if (t == "$PhysicalNames") {
            tok.section = "PhysicalNames";
            const long long n = tok.next_int();
            for (long long i = 0; i < n; ++i) {
                tok.next_int(); // dim
                const long long tag = tok.next_int();
                std::string name = tok.next();
                // Names are quoted and may contain spaces.
                while (name.size() < 2 || name.back() != '"') name += " " + tok.next();
                out.physical_names[static_cast<int>(tag)] = name.substr(1, name.size() - 2);
            }
            tok.expect("$EndPhysicalNames");
        } else if (t == "$Nodes") {
            tok.section = "Nodes";
            saw_nodes = true;
            const long long nblocks = tok.next_int();
            const long long nnodes = tok.next_int();
            tok.next_int(); // min tag
            tok.next_int(); // max tag
            long long seen = 0;
            for (long long b = 0; b < nblocks; ++b) {
                tok.next_int(); // entity dim
                tok.next_int(); // entity tag
                const long long parametric = tok.next_int();
                if (parametric != 0)
                    throw io_error("MalformedSection", "parametric nodes unsupported in $Nodes");
                const long long in_block = tok.next_int();
                std::vector<long long> tags(in_block);
                for (auto& g : tags) g = tok.next_int();
                for (long long i = 0; i < in_block; ++i) {
                    const double x = tok.next_double();
                    const double y = tok.next_double();
                    const double z = tok.next_double();
                    node_of_tag[tags[i]] = static_cast<int>(coords.size());
                    coords.emplace_back(x, y, z);
                }
                seen += in_block;
            }
            if (seen != nnodes)
                throw io_error("MalformedSection", "node count mismatch in $Nodes");
            tok.expect("$EndNodes");
        } else if (t == "$Elements") {
            tok.section = "Elements";
            saw_elements = true;
            const long long nblocks = tok.next_int();
            tok.next_int(); // total elements
            tok.next_int();
            tok.next_int();
            // Nodes per element for the linear types we may encounter.
            auto nodes_of_type = [](long long type) -> int {
                switch (type) {
                    case 1: return 2;  // line
                    case 2: return 3;  // triangle
                    case 3: return 4;  // quad
                    case 4: return 4;  // tet
                    case 5: return 8;  // hex
                    case 6: return 6;  // prism
                    case 7: return 5;  // pyramid
                    case 15: return 1; // point
                    default: return -1;
                }
            };
            for (long long b = 0; b < nblocks; ++b) {
                tok.next_int(); // entity dim
                const long long entity_tag = tok.next_int();
                const long long type = tok.next_int();
                const long long in_block = tok.next_int();
                const int npe = nodes_of_type(type);
                if (npe < 0)
                    throw io_error("MalformedSection",
                                   "unsupported element type " + std::to_string(type) + " in $Elements");
                for (long long i = 0; i < in_block; ++i) {
                    tok.next_int(); // element tag
                    if (type == 4) {
                        std::array<long long, 4> tet;
                        for (auto& g : tet) g = tok.next_int();
                        tet_tags_raw.push_back(tet);
                        block_tags.push_back(static_cast<int>(entity_tag));
                    } else {
                        for (int k = 0; k < npe; ++k) tok.next_int();
                        ++out.ignored_elements;
                    }
                }
            }
            tok.expect("$EndElements");
        } else if (!t.empty() && t[0] == '$' && t.rfind("$End", 0) != 0) {
            tok.section = t.substr(1);
            tok.skip_to_end(); // tolerated: $Entities and friends
        }
    }

    if (!saw_nodes) throw io_error("MalformedSection", "missing $Nodes section");
    if (!saw_elements) throw io_error("MalformedSection", "missing $Elements section");
    if (tet_tags_raw.empty()) throw io_error("NoTets", "no 4-node tets in " + path);

    // Compact to the nodes actually used by tets, in $Nodes order.
    std::vector<int> used(coords.size(), -1);
    std::vector<std::array<int, 4>> tets_parse_idx(tet_tags_raw.size());
    for (std::size_t i = 0; i < tet_tags_raw.size(); ++i)
        for (int k = 0; k < 4; ++k) {
            auto it = node_of_tag.find(tet_tags_raw[i][k]);
            if (it == node_of_tag.end())
                throw io_error("MalformedSection", "element references unknown node tag " +
                                                        std::to_string(tet_tags_raw[i][k]));
            tets_parse_idx[i][k] = it->second;
            used[it->second] = 0;
        }
    std::vector<Vec3> verts;
    verts.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (used[i] == 0) {
            used[i] = static_cast<int>(verts.size());
            verts.push_back(coords[i]);
        }
    std::vector<std::array<int, 4>> tets(tets_parse_idx.size());
    for (std::size_t i = 0; i < tets_parse_idx.size(); ++i)
        for (int k = 0; k < 4; ++k) tets[i][k] = used[tets_parse_idx[i][k]];

    out.complex = build_complex(verts, tets);
    out.tet_tags = std::move(block_tags);
    return out;
}

void export_msh(const SimplicialComplex& sc, const std::vector<int>& tet_tags,
                const std::string& path) {
    std::ofstream f(path);
    if (!f) throw io_error("IoFailure", "cannot open " + path + " for writing");

    std::vector<int> tags = tet_tags;
    if (tags.empty()) tags.assign(sc.n3(), 1);
    if (static_cast<int>(tags.size()) != sc.n3())
        throw io_error("IoFailure", "tet tag list does not match tet count");

    std::map<int, std::vector<int>> by_tag;
    for (int t = 0; t < sc.n3(); ++t) by_tag[tags[t]].push_back(t);

    char buf[256];
    auto line = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof(buf), fmt, args...);
        f << buf;
    };

    f << "$MeshFormat\n4.1 0 8\n$EndMeshFormat\n";
    f << "$Nodes\n";
    line("1 %d 1 %d\n", sc.n0(), sc.n0());
    line("3 1 0 %d\n", sc.n0());
    for (int i = 0; i < sc.n0(); ++i) line("%d\n", i + 1);
    for (const Vec3& v : sc.vertices) line("%.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    f << "$EndNodes\n";

    f << "$Elements\n";
    int total = sc.n3();
    line("%d %d 1 %d\n", static_cast<int>(by_tag.size()), total, total);
    int elem_tag = 1;
    for (const auto& [tag, list] : by_tag) {
        line("3 %d 4 %d\n", tag, static_cast<int>(list.size()));
        for (int t : list) {
            const auto& k = sc.tets[t];
            line("%d %d %d %d %d\n", elem_tag++, k[0] + 1, k[1] + 1, k[2] + 1, k[3] + 1);
        }
    }
    f << "$EndElements\n";
    if (!f) throw io_error("IoFailure", "write to " + path + " failed");
}

} // namespace decem
