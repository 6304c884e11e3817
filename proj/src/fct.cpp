#include "neighborly/fct.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace neighborly {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

SimplicialComplex read_fct(std::istream& in)
{
    std::vector<Face> faces;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = 0;
        while (pos < line.size() && is_blank(line[pos]))
            ++pos;
        if (pos == line.size() || line[pos] == '#')
            continue;

        std::vector<Vertex> labels;
        while (pos < line.size()) {
            if (is_blank(line[pos])) {
                ++pos;
                continue;
            }
            std::uint64_t value = 0;
            const char* first = line.data() + pos;
            const char* last = line.data() + line.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec == std::errc::result_out_of_range || (ec == std::errc() && value > std::numeric_limits<Vertex>::max()))
                throw ParseError(lineno, "vertex label out of range");
            if (ec != std::errc() || (ptr != last && !is_blank(*ptr)))
                throw ParseError(lineno, "expected a non-negative integer label");
            labels.push_back(static_cast<Vertex>(value));
            pos = static_cast<std::size_t>(ptr - line.data());
        }
        try {
            faces.emplace_back(std::move(labels));
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (faces.empty())
        throw ParseError(lineno, "no facets found");
    return SimplicialComplex::from_facets(std::move(faces));
}

SimplicialComplex read_fct_string(const std::string& text)
{
    std::istringstream in(text);
    return read_fct(in);
}

void write_fct(std::ostream& out, const SimplicialComplex& x)
{
    for (const Face& f : x.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i)
                out << ' ';
            out << f[i];
        }
        out << '\n';
    }
}

std::string to_fct_string(const SimplicialComplex& x)
{
    std::ostringstream out;
    write_fct(out, x);
    return out.str();
}

}  // namespace neighborly
