#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "phasetrop/valued_poly.hpp"

namespace phasetrop {

class ParseError : public PreconditionError {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return msg_; }

private:
    std::string msg_;
    std::size_t line_, column_;
};

HahnScalar parse_scalar(const std::string& text);
ValuedPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

using Mat2Entries = std::array<HahnScalar, 4>;  // row-major

struct SessionItem {
    std::string name;
    std::variant<ValuedPoly, std::vector<ValuedPoly>, Mat2Entries> value;
    std::size_t line;
};

// Parsed input file: variable declaration and named polynomials, ideals and matrices.
struct Session {
    std::vector<std::string> vars;
    std::vector<SessionItem> items;

    const SessionItem* find(const std::string& name) const;
};

Session parse_session(const std::string& text);

}  // namespace phasetrop
