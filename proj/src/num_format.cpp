#include "gbsoft/num_format.hpp"

#include <charconv>
#include <system_error>

namespace gbsoft {

std::string format_double(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace gbsoft
