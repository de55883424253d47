#pragma once

#include "djp/pbw.hpp"

#include <stdexcept>
#include <string>

namespace djp {

struct ParseError : std::runtime_error {
    size_t position;  // byte offset into the input
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what), position(pos) {}
};

// expr   := ('+'|'-')? term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' integer)?
// atom   := 'x'|'y'|'g'|'gi'|'xi'|'u'|'v' | rational | '(' expr ')'
// rational := integer ('/' positive-integer)?
// Whitespace insensitive. Negative exponents are allowed on g and gi only.
// Products multiply in the algebra, so the result is already in normal form.
AlgebraElement parse_expression(const std::string& text);

} // namespace djp
