#ifndef MOFLOW_INSTANCE_IO_HPP
#define MOFLOW_INSTANCE_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "moflow/network.hpp"

namespace moflow {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message),
        line(line_number) {}
};

// Instance file format (text, line oriented):
//   c <comment>
//   p momcf <n> <m> <d>                        exactly one, before n/a lines
//   n <id> <balance>                           1-based ids, omitted => 0
//   a <tail> <head> <lower> <upper> <c_1> ... <c_d>   costs as int or p/q
Network parse_instance(std::istream& input);
Network parse_instance_file(const std::string& path);

//! Canonical serialization: problem line, nonzero balances in id order,
//! arcs in index order, costs in lowest terms. Parse-serialize round-trips.
void write_instance(const Network& network, std::ostream& output,
                    const std::vector<std::string>& comments = {});

std::string instance_to_string(const Network& network,
                               const std::vector<std::string>& comments = {});

//! FNV-1a hash of the canonical serialization, as 16 hex digits.
std::string instance_digest(const Network& network);

}  // namespace moflow

#endif
