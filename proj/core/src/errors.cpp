#include "crvar/errors.hpp"

namespace crvar {

SyntaxError::SyntaxError(std::string const& msg, std::size_t position)
    : Error(msg + " at position " + std::to_string(position)),
      position_(position) {}

InvalidWord::InvalidWord(int condition, std::size_t position)
    : Error("invalid word: condition (" + std::string(condition == 1   ? "i"
                                                     : condition == 2 ? "ii"
                                                                      : "iii")
            + ") violated at symbol " + std::to_string(position)),
      condition_(condition),
      position_(position) {}

UnboundVariable::UnboundVariable(std::string const& name)
    : Error("unbound variable '" + name + "'") {}

}  // namespace crvar
