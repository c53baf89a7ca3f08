#include "ssum/instance_io.hpp"

#include <charconv>
#include <string>

#include "ssum/errors.hpp"

namespace ssum {

Instance parse_instance(std::istream& in, u64 target) {
    Instance inst;
    inst.target = target;
    std::string tok;
    std::size_t index = 0;
    while (in >> tok) {
        ++index;
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(index, "'" + tok + "' is not a positive decimal integer");
        u64 value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec == std::errc::result_out_of_range || value > (u64{1} << 62))
            throw ParseError(index, "'" + tok + "' is out of range (items must be <= 2^62)");
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(index, "'" + tok + "' is not a positive decimal integer");
        if (value == 0) throw ParseError(index, "items must be positive");
        inst.items.push_back(value);
    }
    if (in.bad()) throw std::ios_base::failure("I/O error while reading the instance");
    return inst;
}

}  // namespace ssum
