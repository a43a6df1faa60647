#include "planecount/planar_code.hpp"

namespace planecount {

std::vector<RotationSystem> parse_planar_code(std::string_view bytes) {
    std::size_t pos = 0;
    if (bytes.substr(0, 2) == ">>") {
        std::size_t close = bytes.find("<<");
        if (close == std::string_view::npos)
            throw MalformedPlanarCodeError("planar_code: unterminated header", 0);
        std::string_view header = bytes.substr(2, close - 2);
        if (header.substr(0, 11) != "planar_code")
            throw MalformedPlanarCodeError("planar_code: unexpected header \"" +
                                               std::string(header) + "\"",
                                           0);
        pos = close + 2;
    }

    std::vector<RotationSystem> out;
    std::size_t record = 0;
    while (pos < bytes.size()) {
        unsigned char n = static_cast<unsigned char>(bytes[pos++]);
        if (n == 0)
            throw MalformedPlanarCodeError("planar_code: 2-byte vertex mode unsupported",
                                           record);
        std::vector<std::vector<int>> nbrs(n);
        for (int v = 0; v < static_cast<int>(n); ++v) {
            while (true) {
                if (pos >= bytes.size())
                    throw MalformedPlanarCodeError("planar_code: truncated record", record);
                unsigned char b = static_cast<unsigned char>(bytes[pos++]);
                if (b == 0)
                    break;
                if (b > n)
                    throw MalformedPlanarCodeError("planar_code: neighbor id " +
                                                       std::to_string(int(b)) +
                                                       " exceeds vertex count",
                                                   record);
                nbrs[v].push_back(int(b) - 1);
            }
        }
        try {
            out.push_back(RotationSystem::from_neighbor_lists(nbrs));
        } catch (const InvalidRotationError& e) {
            throw MalformedPlanarCodeError(std::string("planar_code: ") + e.what(), record);
        }
        ++record;
    }
    return out;
}

std::string write_planar_code(std::span<const RotationSystem> graphs) {
    std::string out(kPlanarCodeHeader);
    for (const RotationSystem& rs : graphs) {
        if (rs.vertex_count() > 255)
            throw std::invalid_argument("write_planar_code: more than 255 vertices");
        out.push_back(static_cast<char>(rs.vertex_count()));
        for (int v = 0; v < rs.vertex_count(); ++v) {
            for (int u : rs.neighbor_list(v))
                out.push_back(static_cast<char>(u + 1));
            out.push_back('\0');
        }
    }
    return out;
}

}  // namespace planecount
