#include "inls/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>

namespace inls {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_snapshot(const std::filesystem::path& path, const RadialField& u,
                    const PhysParams& p, double t) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_snapshot: cannot open " + path.string());
    out << "# N " << p.N << "\n";
    out << "# b " << fmt17(p.b) << "\n";
    out << "# alpha " << fmt17(p.alpha) << "\n";
    out << "# sign " << sign_name(p.sign) << "\n";
    out << "# t " << fmt17(t) << "\n";
    out << "# J " << u.grid->points << "\n";
    out << "# h " << fmt17(u.grid->h) << "\n";
    out << "r,re,im\n";
    for (int j = 0; j < u.grid->points; ++j)
        out << fmt17(u.grid->r[j]) << ',' << fmt17(u.values[j].real()) << ','
            << fmt17(u.values[j].imag()) << "\n";
}

SnapshotData read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_snapshot: cannot open " + path.string());
    std::map<std::string, std::string> header;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            const auto sp = line.find(' ', 2);
            if (sp != std::string::npos) header[line.substr(2, sp - 2)] = line.substr(sp + 1);
        } else {
            break;  // column header row
        }
    }
    auto need = [&header, &path](const std::string& key) -> const std::string& {
        auto it = header.find(key);
        if (it == header.end())
            throw std::runtime_error("read_snapshot: missing header '" + key + "' in " + path.string());
        return it->second;
    };
    SnapshotData snap;
    snap.params.N = std::stoi(need("N"));
    snap.params.b = std::strtod(need("b").c_str(), nullptr);
    snap.params.alpha = std::strtod(need("alpha").c_str(), nullptr);
    snap.params.sign = need("sign") == "defocusing" ? Sign::defocusing : Sign::focusing;
    snap.t = std::strtod(need("t").c_str(), nullptr);
    const int J = std::stoi(need("J"));
    const double h = std::strtod(need("h").c_str(), nullptr);
    auto grid = RadialGrid::make(snap.params.N, J, J * h);
    snap.u = RadialField(grid);
    int j = 0;
    while (std::getline(in, line) && j < J) {
        const char* s = line.c_str();
        const char* c1 = std::strchr(s, ',');
        if (!c1) throw std::runtime_error("read_snapshot: malformed row in " + path.string());
        const char* c2 = std::strchr(c1 + 1, ',');
        if (!c2) throw std::runtime_error("read_snapshot: malformed row in " + path.string());
        snap.u.values[j++] = {std::strtod(c1 + 1, nullptr), std::strtod(c2 + 1, nullptr)};
    }
    if (j != J) throw std::runtime_error("read_snapshot: row count mismatch in " + path.string());
    return snap;
}

}  // namespace inls
