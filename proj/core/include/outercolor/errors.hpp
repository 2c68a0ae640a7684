#pragma once

#include <stdexcept>
#include <string>

namespace outercolor {

// Input data is structurally unusable: unparsable files, self-loops, bad
// generator parameters.  The command line tool maps this to exit code 3.
class MalformedInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A connected component violates the outerplanar edge bound m <= 2n-3, so no
// coloring is attempted.  Mapped to exit code 2.
class NotOuterplanarError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A connected component with max degree >= 3 contains none of the four
// reducible configurations.  Every outerplanar graph contains one, so this
// certifies the input is not outerplanar.  Mapped to exit code 2.
class NotReducibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An extension step ran out of feasible colors or found an empty incoming
// set it relies on.  The construction rules these situations out, so hitting
// this means a caller broke a precondition or there is a bug; it is never
// recovered from.
class ExtensionInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace outercolor
