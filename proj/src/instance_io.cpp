#include <ttplon/instance_io.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace ttplon {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_real(std::string_view text, std::size_t line) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ParseError("expected a number, got '" + t + "'", line);
    }
    return v;
}

long parse_int(std::string_view text, std::size_t line) {
    const std::string t = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ParseError("expected an integer, got '" + t + "'", line);
    }
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) {
        out.push_back(tok);
    }
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

} // namespace

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

Instance parse_instance(std::istream& in) {
    struct Header {
        std::string value;
        std::size_t line;
    };
    std::map<std::string, Header, std::less<>> header;
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            if (!trim(out).empty()) {
                return true;
            }
        }
        return false;
    };

    // Header block, up to the coordinate section.
    bool have_coords = false;
    while (next_line(line)) {
        const std::string t = trim(line);
        if (starts_with(t, "NODE_COORD_SECTION")) {
            have_coords = true;
            break;
        }
        const auto colon = t.find(':');
        if (colon == std::string::npos) {
            throw ParseError("malformed header line '" + t + "'", lineno);
        }
        header[trim(std::string_view(t).substr(0, colon))] = {trim(std::string_view(t).substr(colon + 1)), lineno};
    }
    if (!have_coords) {
        throw ParseError("missing NODE_COORD_SECTION", lineno);
    }

    auto required = [&](std::string_view key) -> const Header& {
        const auto it = header.find(key);
        if (it == header.end()) {
            throw ParseError("missing header field '" + std::string(key) + "'", lineno);
        }
        return it->second;
    };
    auto real_field = [&](std::string_view key) {
        const Header& h = required(key);
        return parse_real(h.value, h.line);
    };
    auto optional_real = [&](std::string_view key, double fallback) {
        const auto it = header.find(key);
        return it == header.end() ? fallback : parse_real(it->second.value, it->second.line);
    };

    Instance inst;
    inst.name = required("PROBLEM NAME").value;
    inst.knapsack_type = required("KNAPSACK DATA TYPE").value;
    const Header& dim = required("DIMENSION");
    const long n = parse_int(dim.value, dim.line);
    const Header& items = required("NUMBER OF ITEMS");
    const long m = parse_int(items.value, items.line);
    if (n < 1) {
        throw ParseError("DIMENSION must be positive", dim.line);
    }
    if (m < 1) {
        throw ParseError("NUMBER OF ITEMS must be positive", items.line);
    }
    inst.capacity = real_field("CAPACITY OF KNAPSACK");
    inst.v_min = real_field("MIN SPEED");
    inst.v_max = real_field("MAX SPEED");
    inst.renting_rate = real_field("RENTING RATIO");
    inst.drop_rate = optional_real("DROPPING RATE", 1.0);
    inst.drop_interval = optional_real("DROP INTERVAL", 10.0);
    const Header& ew = required("EDGE_WEIGHT_TYPE");
    if (ew.value != "CEIL_2D") {
        throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + ew.value + "'", ew.line);
    }

    inst.coords.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        if (!next_line(line)) {
            throw ParseError("expected " + std::to_string(n) + " coordinate lines", lineno);
        }
        const auto tok = split_ws(line);
        if (tok.size() != 3) {
            throw ParseError("coordinate line needs INDEX X Y", lineno);
        }
        if (parse_int(tok[0], lineno) != i + 1) {
            throw ParseError("coordinate index out of sequence", lineno);
        }
        inst.coords[static_cast<std::size_t>(i)] = {parse_real(tok[1], lineno), parse_real(tok[2], lineno)};
    }

    if (!next_line(line) || !starts_with(trim(line), "ITEMS SECTION")) {
        throw ParseError("missing ITEMS SECTION", lineno);
    }
    for (long k = 0; k < m; ++k) {
        if (!next_line(line)) {
            throw ParseError("item count mismatch: expected " + std::to_string(m) + " items", lineno);
        }
        const auto tok = split_ws(line);
        if (tok.size() != 4) {
            throw ParseError("item line needs INDEX PROFIT WEIGHT NODE", lineno);
        }
        if (parse_int(tok[0], lineno) != k + 1) {
            throw ParseError("item index out of sequence", lineno);
        }
        inst.profits.push_back(parse_real(tok[1], lineno));
        inst.weights.push_back(parse_real(tok[2], lineno));
        const long city = parse_int(tok[3], lineno);
        if (city < 2 || city > n) {
            throw ParseError("item assigned to invalid node " + std::to_string(city), lineno);
        }
        inst.item_city.push_back(static_cast<int>(city - 1));
    }
    if (next_line(line)) {
        throw ParseError("item count mismatch: unexpected trailing line", lineno);
    }

    inst.dist = ceil2d_distances(inst.coords);
    try {
        inst.validate();
    } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno);
    }
    return inst;
}

void format_instance(const Instance& inst, std::ostream& out) {
    if (inst.dist != ceil2d_distances(inst.coords)) {
        throw DomainError("only CEIL_2D instances can be written");
    }
    out << "PROBLEM NAME: " << inst.name << '\n'
        << "KNAPSACK DATA TYPE: " << inst.knapsack_type << '\n'
        << "DIMENSION: " << inst.n() << '\n'
        << "NUMBER OF ITEMS: " << inst.m() << '\n'
        << "CAPACITY OF KNAPSACK: " << format_real(inst.capacity) << '\n'
        << "MIN SPEED: " << format_real(inst.v_min) << '\n'
        << "MAX SPEED: " << format_real(inst.v_max) << '\n'
        << "RENTING RATIO: " << format_real(inst.renting_rate) << '\n';
    if (inst.drop_rate != 1.0) {
        out << "DROPPING RATE: " << format_real(inst.drop_rate) << '\n';
    }
    if (inst.drop_interval != 10.0) {
        out << "DROP INTERVAL: " << format_real(inst.drop_interval) << '\n';
    }
    out << "EDGE_WEIGHT_TYPE: CEIL_2D\n"
        << "NODE_COORD_SECTION (INDEX, X, Y):\n";
    for (int i = 0; i < inst.n(); ++i) {
        const Point& p = inst.coords[static_cast<std::size_t>(i)];
        out << i + 1 << ' ' << format_real(p.x) << ' ' << format_real(p.y) << '\n';
    }
    out << "ITEMS SECTION (INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n";
    for (int k = 0; k < inst.m(); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        out << k + 1 << ' ' << format_real(inst.profits[idx]) << ' ' << format_real(inst.weights[idx]) << ' '
            << inst.item_city[idx] + 1 << '\n';
    }
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file " + path.string());
    }
    return parse_instance(in);
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write instance file " + path.string());
    }
    format_instance(inst, out);
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

} // namespace ttplon
