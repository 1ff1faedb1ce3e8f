#include "moflow/instance_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace moflow {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::int64_t parse_int64(const std::string& token, int line,
                         const std::string& what) {
  try {
    std::size_t used = 0;
    const std::int64_t value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, "invalid " + what + " '" + token + "'");
  }
}

int parse_node_id(const std::string& token, int n, int line) {
  const std::int64_t id = parse_int64(token, line, "node id");
  if (id < 1 || id > n) {
    throw ParseError(line, "node id " + token + " out of range 1.." +
                               std::to_string(n));
  }
  return static_cast<int>(id - 1);
}

}  // namespace

Network parse_instance(std::istream& input) {
  Network network;
  bool have_problem_line = false;
  int declared_arcs = 0;
  std::vector<bool> node_seen;
  std::string line;
  int line_number = 0;

  while (std::getline(input, line)) {
    ++line_number;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];

    if (kind == "c") continue;

    if (kind == "p") {
      if (have_problem_line) {
        throw ParseError(line_number, "duplicate problem line");
      }
      if (tokens.size() != 5 || tokens[1] != "momcf") {
        throw ParseError(line_number,
                         "problem line must be 'p momcf <n> <m> <d>'");
      }
      const std::int64_t n = parse_int64(tokens[2], line_number, "node count");
      const std::int64_t m = parse_int64(tokens[3], line_number, "arc count");
      const std::int64_t d =
          parse_int64(tokens[4], line_number, "objective count");
      if (n < 1 || n > 1'000'000) {
        throw ParseError(line_number, "node count out of range");
      }
      if (m < 0 || m > 10'000'000) {
        throw ParseError(line_number, "arc count out of range");
      }
      if (d < 1 || d > 64) {
        throw ParseError(line_number, "objective count out of range");
      }
      network.node_count = static_cast<int>(n);
      network.objective_count = static_cast<int>(d);
      network.balance.assign(network.node_count, 0);
      node_seen.assign(network.node_count, false);
      declared_arcs = static_cast<int>(m);
      network.arcs.reserve(declared_arcs);
      have_problem_line = true;
      continue;
    }

    if (kind == "n") {
      if (!have_problem_line) {
        throw ParseError(line_number, "node line before problem line");
      }
      if (tokens.size() != 3) {
        throw ParseError(line_number, "node line must be 'n <id> <balance>'");
      }
      const int id = parse_node_id(tokens[1], network.node_count, line_number);
      if (node_seen[id]) {
        throw ParseError(line_number,
                         "duplicate node line for id " + tokens[1]);
      }
      node_seen[id] = true;
      network.balance[id] = parse_int64(tokens[2], line_number, "balance");
      continue;
    }

    if (kind == "a") {
      if (!have_problem_line) {
        throw ParseError(line_number, "arc line before problem line");
      }
      if (static_cast<int>(network.arcs.size()) == declared_arcs) {
        throw ParseError(line_number, "more arc lines than declared");
      }
      if (tokens.size() != 5 + static_cast<std::size_t>(
                                   network.objective_count)) {
        throw ParseError(
            line_number,
            "arc line must be 'a <tail> <head> <lower> <upper> <" +
                std::to_string(network.objective_count) + " costs>'");
      }
      Arc arc;
      arc.tail = parse_node_id(tokens[1], network.node_count, line_number);
      arc.head = parse_node_id(tokens[2], network.node_count, line_number);
      arc.lower = parse_int64(tokens[3], line_number, "lower bound");
      arc.upper = parse_int64(tokens[4], line_number, "upper bound");
      arc.cost.reserve(network.objective_count);
      for (int k = 0; k < network.objective_count; ++k) {
        try {
          arc.cost.push_back(rational_from_string(tokens[5 + k]));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_number, e.what());
        }
      }
      network.arcs.push_back(std::move(arc));
      continue;
    }

    throw ParseError(line_number, "unknown line type '" + kind + "'");
  }

  if (!have_problem_line) {
    throw ParseError(line_number == 0 ? 1 : line_number,
                     "missing problem line");
  }
  if (static_cast<int>(network.arcs.size()) != declared_arcs) {
    throw ParseError(line_number,
                     "expected " + std::to_string(declared_arcs) +
                         " arc lines, found " +
                         std::to_string(network.arcs.size()));
  }
  return network;
}

Network parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open instance file '" + path + "'");
  }
  return parse_instance(in);
}

void write_instance(const Network& network, std::ostream& output,
                    const std::vector<std::string>& comments) {
  for (const auto& comment : comments) {
    output << "c " << comment << "\n";
  }
  output << "p momcf " << network.node_count << " " << network.m() << " "
         << network.objective_count << "\n";
  for (int i = 0; i < network.node_count; ++i) {
    if (network.balance[i] != 0) {
      output << "n " << (i + 1) << " " << network.balance[i] << "\n";
    }
  }
  for (const Arc& arc : network.arcs) {
    output << "a " << (arc.tail + 1) << " " << (arc.head + 1) << " "
           << arc.lower << " " << arc.upper;
    for (const Rational& c : arc.cost) {
      output << " " << rational_to_string(c);
    }
    output << "\n";
  }
}

std::string instance_to_string(const Network& network,
                               const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_instance(network, out, comments);
  return out.str();
}

std::string instance_digest(const Network& network) {
  const std::string canonical = instance_to_string(network);
  std::uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char byte : canonical) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return hex;
}

}  // namespace moflow
