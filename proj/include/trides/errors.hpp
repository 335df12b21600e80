#pragma once

#include <stdexcept>
#include <string>

namespace trides {

// Base type of every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct composite_p : error { using error::error; };
struct not_prime_power : error { using error::error; };
struct size_exceeded : error { using error::error; };
struct domain_error : error { using error::error; };
struct zero_argument : error { using error::error; };
struct even_characteristic : error { using error::error; };
struct index_error : error { using error::error; };
struct malformed_block : error { using error::error; };
struct bad_params : error { using error::error; };
struct not_transitive : error { using error::error; };
struct not_automorphism : error { using error::error; };

// Failure while reading one of the text formats; line is 1-based,
// 0 means the file itself could not be read.
struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what_)
        : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace trides
