#include "indep/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace indep::io {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(strip(cur));
    return out;
}

}  // namespace

FunctionSet parse_function_set(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    std::vector<std::string> names;
    std::vector<Value> declared_values;
    std::vector<std::vector<Value>> rows;
    bool have_attrs = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("attrs:", 0) == 0) {
            if (have_attrs) throw parse_error(lineno, "duplicate attrs header");
            names = split(line.substr(6), ',');
            have_attrs = true;
            continue;
        }
        if (line.rfind("values:", 0) == 0) {
            for (const std::string& v : split(line.substr(7), ','))
                declared_values.push_back(static_cast<Value>(std::stoul(v)));
            continue;
        }
        if (!have_attrs) throw parse_error(lineno, "row before attrs header");
        std::vector<Value> row;
        if (line.find(',') != std::string::npos) {
            for (const std::string& v : split(line, ',')) {
                try {
                    row.push_back(static_cast<Value>(std::stoul(v)));
                } catch (const std::exception&) {
                    throw parse_error(lineno, "bad value '" + v + "'");
                }
            }
        } else {
            for (char c : line) {
                if (c < '0' || c > '9') throw parse_error(lineno, "bad digit in compact row");
                row.push_back(static_cast<Value>(c - '0'));
            }
        }
        if (row.size() != names.size())
            throw parse_error(lineno, "row has " + std::to_string(row.size()) + " values, want " +
                                          std::to_string(names.size()));
        if (std::find(rows.begin(), rows.end(), row) != rows.end())
            throw parse_error(lineno, "duplicate row");
        rows.push_back(std::move(row));
    }
    if (!have_attrs) throw parse_error(lineno, "missing attrs header");

    Value alphabet;
    if (!declared_values.empty()) {
        for (size_t i = 0; i < declared_values.size(); ++i)
            if (declared_values[i] != i)
                throw parse_error(lineno, "values must be 0,1,...,k in order");
        alphabet = static_cast<Value>(declared_values.size());
        for (size_t r = 0; r < rows.size(); ++r)
            for (Value v : rows[r])
                if (v >= alphabet) throw parse_error(lineno, "row value outside declared alphabet");
    } else {
        Value mx = 1;
        for (const auto& r : rows)
            for (Value v : r) mx = std::max(mx, v);
        alphabet = mx + 1;
    }
    try {
        return FunctionSet::from_rows(AttributeSet(names), alphabet, rows);
    } catch (const error& e) {
        throw parse_error(lineno, e.what());
    }
}

std::string render_function_set(const FunctionSet& fs) {
    std::string out = "attrs: ";
    for (int i = 0; i < fs.attrs().size(); ++i) {
        if (i) out += ",";
        out += fs.attrs().name(i);
    }
    out += "\nvalues: ";
    for (Value v = 0; v < fs.alphabet(); ++v) {
        if (v) out += ",";
        out += std::to_string(v);
    }
    out += "\n";
    for (Word r : fs.rows()) out += fs.format_row(r) + "\n";
    return out;
}

Triple parse_triple(const AttributeSet& attrs, const std::string& text) {
    std::vector<std::string> parts = split(text, '|');
    if (parts.size() != 3)
        throw precondition_error("triple needs three |-separated components: " + text);
    Mask m[3];
    for (int c = 0; c < 3; ++c) {
        m[c] = 0;
        if (parts[c] == "-" || parts[c].empty()) continue;
        std::istringstream in(parts[c]);
        std::string name;
        while (in >> name) {
            int i = attrs.index_of(name);
            if (i < 0) throw precondition_error("unknown attribute: " + name);
            m[c] |= Mask(1) << i;
        }
    }
    if ((m[0] & m[1]) || (m[0] & m[2]) || (m[1] & m[2]))
        throw precondition_error("triple components overlap: " + text);
    return Triple(m[0], m[1], m[2]);
}

std::vector<Triple> parse_triple_family(const AttributeSet& attrs, const std::string& text) {
    std::vector<Triple> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        out.push_back(parse_triple(attrs, line));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace indep::io
