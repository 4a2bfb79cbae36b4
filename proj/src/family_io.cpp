#include "ucf/family_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace ucf {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

int parse_positive_int(const std::string& token, int line, const char* what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(token, &used);
        if (used != token.size() || v < 1) {
            throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
        }
        return static_cast<int>(v);
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
    }
}

}  // namespace

SetFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int declared_n = 0;
    int max_element = 0;
    bool saw_sets = false;
    std::vector<ElementSet> sets;
    std::vector<int> set_lines;  // for duplicate diagnostics

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (line.rfind("n=", 0) == 0) {
            if (declared_n != 0) throw ParseError(line_no, "duplicate n= header");
            if (saw_sets) throw ParseError(line_no, "n= header must precede set lines");
            declared_n = parse_positive_int(trim(line.substr(2)), line_no, "ground size");
            if (declared_n > kMaxGroundSize) {
                throw ParseError(line_no, "ground size exceeds the cap of 24");
            }
            continue;
        }

        saw_sets = true;
        ElementSet s;
        if (line != "-") {
            std::string token;
            for (std::size_t p = 0; p <= line.size(); ++p) {
                const char c = p < line.size() ? line[p] : ',';
                if (c == ' ' || c == '\t' || c == ',') {
                    if (!token.empty()) {
                        const int e = parse_positive_int(token, line_no, "element");
                        if (e > kMaxGroundSize) {
                            throw ParseError(line_no, "element exceeds the ground cap of 24");
                        }
                        if (declared_n != 0 && e > declared_n) {
                            throw ParseError(line_no, "element " + std::to_string(e) +
                                                          " exceeds declared n=" +
                                                          std::to_string(declared_n));
                        }
                        max_element = std::max(max_element, e);
                        s = s.with(e);
                        token.clear();
                    }
                } else {
                    token += c;
                }
            }
            if (s.empty()) throw ParseError(line_no, "empty set line (use '-' for the empty set)");
        }
        const auto dup = std::find(sets.begin(), sets.end(), s);
        if (dup != sets.end()) {
            const auto idx = static_cast<std::size_t>(dup - sets.begin());
            throw ParseError(line_no, "duplicate set (first seen on line " +
                                          std::to_string(set_lines[idx]) + ")");
        }
        sets.push_back(s);
        set_lines.push_back(line_no);
    }

    if (sets.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no sets in input");
    const int n = declared_n != 0 ? declared_n : max_element;
    if (n == 0) {
        // Only "-" lines and no header: a family over an undeclared ground.
        throw ParseError(line_no, "ground size unknown (add an n= header)");
    }
    return {GroundSet{n}, std::move(sets)};
}

SetFamily parse_family_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family(buf.str());
}

std::string to_text(const SetFamily& f) {
    std::string out = "n=" + std::to_string(f.n()) + "\n";
    for (const ElementSet s : f.sets()) {
        if (s.empty()) {
            out += "-\n";
            continue;
        }
        bool first = true;
        for (int e = 1; e <= f.n(); ++e) {
            if (!s.contains(e)) continue;
            if (!first) out += ' ';
            out += std::to_string(e);
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace ucf
