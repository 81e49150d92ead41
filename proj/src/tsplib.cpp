#include "tsplab/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tsplab/errors.hpp"

namespace tsplab {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Splits "KEY : value" / "KEY: value" / bare section names.
bool split_keyword(const std::string& line, std::string& key, std::string& value) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
        key = trim(line);
        value.clear();
        return !key.empty();
    }
    key = trim(line.substr(0, colon));
    value = trim(line.substr(colon + 1));
    return !key.empty();
}

} // namespace

Instance Instance::from_coords(std::string name, std::vector<std::pair<double, double>> coords,
                               std::optional<std::int64_t> optimum) {
    if (coords.size() < 3)
        throw ParseError("instance must have at least 3 cities, got " +
                         std::to_string(coords.size()));
    Instance inst;
    inst.name_ = std::move(name);
    inst.m_ = static_cast<int>(coords.size());
    inst.coords_ = std::move(coords);
    inst.optimum_ = optimum;
    if (inst.m_ <= kDistanceMatrixMaxCities) {
        inst.matrix_.resize(static_cast<std::size_t>(inst.m_) * inst.m_);
        for (int i = 0; i < inst.m_; ++i) {
            inst.matrix_[static_cast<std::size_t>(i) * inst.m_ + i] = 0;
            for (int j = i + 1; j < inst.m_; ++j) {
                const int d = inst.euclidean_rounded(i, j);
                inst.matrix_[static_cast<std::size_t>(i) * inst.m_ + j] = d;
                inst.matrix_[static_cast<std::size_t>(j) * inst.m_ + i] = d;
            }
        }
    }
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::string name;
    int dimension = -1;
    std::string edge_weight_type;
    std::vector<std::pair<double, double>> coords;
    std::vector<bool> seen;
    bool got_coords = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty())
            continue;

        std::string key, value;
        if (!split_keyword(stripped, key, value))
            continue;

        if (key == "NAME") {
            name = value;
        } else if (key == "TYPE") {
            if (value != "TSP")
                throw ParseError("unsupported format: TYPE " + value, line_no);
        } else if (key == "DIMENSION") {
            try {
                dimension = std::stoi(value);
            } catch (const std::exception&) {
                throw ParseError("invalid DIMENSION value '" + value + "'", line_no);
            }
            if (dimension < 3)
                throw ParseError("DIMENSION must be at least 3, got " + value, line_no);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            edge_weight_type = value;
            if (value != "EUC_2D")
                throw ParseError("unsupported format: EDGE_WEIGHT_TYPE " + value, line_no);
        } else if (key == "NODE_COORD_SECTION") {
            if (dimension < 0)
                throw ParseError("NODE_COORD_SECTION before DIMENSION", line_no);
            coords.assign(dimension, {0.0, 0.0});
            seen.assign(dimension, false);
            for (int read = 0; read < dimension; ++read) {
                if (!std::getline(in, line))
                    throw ParseError("unexpected end of file in NODE_COORD_SECTION: expected " +
                                         std::to_string(dimension) + " nodes, got " +
                                         std::to_string(read),
                                     line_no + read);
                ++line_no;
                std::istringstream node(line);
                int index;
                double x, y;
                if (!(node >> index >> x >> y))
                    throw ParseError("malformed node coordinate line", line_no);
                if (index < 1 || index > dimension)
                    throw ParseError("node index " + std::to_string(index) + " out of range 1.." +
                                         std::to_string(dimension),
                                     line_no);
                if (seen[index - 1])
                    throw ParseError("duplicate node index " + std::to_string(index), line_no);
                seen[index - 1] = true;
                coords[index - 1] = {x, y};
            }
            got_coords = true;
        } else if (key == "EOF") {
            break;
        }
        // COMMENT, DISPLAY_DATA_TYPE and other keywords are ignored.
    }

    if (dimension < 0)
        throw ParseError("missing DIMENSION");
    if (edge_weight_type.empty())
        throw ParseError("missing EDGE_WEIGHT_TYPE");
    if (!got_coords)
        throw ParseError("missing NODE_COORD_SECTION");

    return Instance::from_coords(name.empty() ? "unnamed" : name, std::move(coords),
                                 known_optimum(name));
}

Instance load_instance(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw ParseError("cannot open instance file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_instance(buffer.str());
}

namespace {

// Mirrors data/optima.csv.
constexpr std::pair<const char*, std::int64_t> kBundledOptima[] = {
    {"eil51", 426},    {"berlin52", 7542}, {"st70", 675},    {"eil76", 538},
    {"pr76", 108159},  {"kroA100", 21282}, {"rd100", 7910},  {"eil101", 629},
    {"lin105", 14379}, {"ch150", 6528},    {"rat195", 2323}, {"d198", 15780},
    {"ts225", 126643}, {"a280", 2579},     {"lin318", 42029}, {"fl417", 11861},
    {"pcb442", 50778}, {"rat575", 6773},
};

} // namespace

const OptimaTable& OptimaTable::bundled() {
    static const OptimaTable table = [] {
        OptimaTable t;
        for (const auto& [name, opt] : kBundledOptima)
            t.entries_.emplace(name, opt);
        return t;
    }();
    return table;
}

OptimaTable OptimaTable::load(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw ParseError("cannot open optima table '" + path + "'");
    OptimaTable table = bundled();
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        const auto comma = stripped.find(',');
        if (comma == std::string::npos)
            throw ParseError("expected 'name,optimum'", line_no);
        const std::string name = trim(stripped.substr(0, comma));
        try {
            table.entries_[name] = std::stoll(stripped.substr(comma + 1));
        } catch (const std::exception&) {
            throw ParseError("invalid optimum value for '" + name + "'", line_no);
        }
    }
    return table;
}

std::optional<std::int64_t> OptimaTable::lookup(std::string_view name) const {
    const auto it = entries_.find(std::string(name));
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::int64_t> known_optimum(std::string_view name) {
    return OptimaTable::bundled().lookup(name);
}

} // namespace tsplab
