#pragma once

// Text forms used by the CLI and the golden files.
//
//   partition     [3,2,1^4]   (flat [3,2,1,1,1,1] is accepted on input)
//   bipartition   ([2,1]|[1])
//   big integers  decimal, optional leading '-'

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "octachar/partition.hpp"

namespace octachar {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);

std::string format_int128(__int128 v);
__int128 parse_int128(std::string_view text);

}  // namespace octachar
