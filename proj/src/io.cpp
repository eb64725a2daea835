#include "isoforge/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "isoforge/error.hpp"
#include "isoforge/rational.hpp"

namespace isoforge {

namespace {

// Tokens with comment lines (starting with '#') removed.
std::vector<std::string> tokenize(std::istream &in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string tok;
    bool first = true;
    while (row >> tok) {
      if (first && tok[0] == '#') break;
      first = false;
      tokens.push_back(tok);
    }
  }
  return tokens;
}

class TokenReader {
 public:
  TokenReader(std::vector<std::string> tokens, std::string what)
      : tokens_(std::move(tokens)), what_(std::move(what)) {}

  const std::string &next(const char *expected) {
    if (pos_ >= tokens_.size())
      throw Error(ErrorKind::ParseError,
                  what_ + ": unexpected end of input, expected " + expected);
    return tokens_[pos_++];
  }

  int next_int(const char *expected) {
    const std::string &tok = next(expected);
    try {
      std::size_t used = 0;
      const int value = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return value;
    } catch (const std::logic_error &) {
      throw Error(ErrorKind::ParseError,
                  what_ + ": expected " + expected + ", got '" + tok + "'");
    }
  }

  void finish() {
    if (pos_ != tokens_.size())
      throw Error(ErrorKind::ParseError,
                  what_ + ": trailing token '" + tokens_[pos_] + "'");
  }

  const std::string &context() const { return what_; }

 private:
  std::vector<std::string> tokens_;
  std::string what_;
  std::size_t pos_ = 0;
};

std::ifstream open_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  return in;
}

}  // namespace

NamedGroup read_group(std::istream &in, const std::string &what) {
  TokenReader r(tokenize(in), what);
  if (r.next("'group'") != "group")
    throw Error(ErrorKind::ParseError, what + ": missing 'group' header");
  NamedGroup out;
  out.name = r.next("group name");
  const int order = r.next_int("group order");
  if (order < 1)
    throw Error(ErrorKind::ParseError, what + ": order must be positive");
  if (r.next("'identity'") != "identity")
    throw Error(ErrorKind::ParseError, what + ": missing 'identity' line");
  const int identity = r.next_int("identity index");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) table[g][h] = r.next_int("table entry");
  r.finish();
  out.group = FiniteGroup::from_cayley(table, identity);
  return out;
}

NamedGroup load_group(const std::string &path) {
  std::ifstream in = open_file(path);
  return read_group(in, path);
}

void write_group(std::ostream &out, const std::string &name,
                 const FiniteGroup &group) {
  out << "group " << name << " " << group.order() << "\n";
  out << "identity " << group.identity() << "\n";
  for (int g = 0; g < group.order(); ++g) {
    for (int h = 0; h < group.order(); ++h)
      out << (h ? " " : "") << group.mul(g, h);
    out << "\n";
  }
}

GroupAction load_action(const std::string &path) {
  std::ifstream in = open_file(path);
  TokenReader r(tokenize(in), path);
  if (r.next("'action'") != "action")
    throw Error(ErrorKind::ParseError, path + ": missing 'action' header");
  const std::string group_path = r.next("group file path");
  const int degree = r.next_int("degree");
  if (degree < 1)
    throw Error(ErrorKind::ParseError, path + ": degree must be positive");

  const std::filesystem::path resolved =
      std::filesystem::path(path).parent_path() / group_path;
  NamedGroup named = load_group(resolved.string());

  std::vector<std::vector<int>> map(named.group.order(),
                                    std::vector<int>(degree));
  for (int g = 0; g < named.group.order(); ++g)
    for (int x = 0; x < degree; ++x) map[g][x] = r.next_int("image");
  r.finish();
  return GroupAction::create(named.group, degree, std::move(map));
}

void write_action(std::ostream &out, const std::string &group_path,
                  const GroupAction &action) {
  out << "action " << group_path << " " << action.degree() << "\n";
  for (int g = 0; g < action.group().order(); ++g) {
    for (int x = 0; x < action.degree(); ++x)
      out << (x ? " " : "") << action.apply(g, x);
    out << "\n";
  }
}

RationalMetric read_metric(std::istream &in, const std::string &what) {
  TokenReader r(tokenize(in), what);
  if (r.next("'metric'") != "metric")
    throw Error(ErrorKind::ParseError, what + ": missing 'metric' header");
  const int degree = r.next_int("degree");
  if (degree < 1)
    throw Error(ErrorKind::ParseError, what + ": degree must be positive");
  std::vector<std::vector<Rat>> matrix(degree, std::vector<Rat>(degree, Rat(0)));
  for (int x = 0; x < degree; ++x)
    for (int y = x + 1; y < degree; ++y) {
      const Rat v = parse_rational(r.next("distance"));
      matrix[x][y] = v;
      matrix[y][x] = v;
    }
  r.finish();
  return RationalMetric::validate(matrix);
}

RationalMetric load_metric(const std::string &path) {
  std::ifstream in = open_file(path);
  return read_metric(in, path);
}

void write_metric(std::ostream &out, const RationalMetric &metric) {
  out << "metric " << metric.degree() << "\n";
  for (int x = 0; x < metric.degree(); ++x) {
    if (x + 1 >= metric.degree()) break;
    for (int y = x + 1; y < metric.degree(); ++y)
      out << (y > x + 1 ? " " : "") << format_rational(metric.at(x, y));
    out << "\n";
  }
}

void save_metric(const std::string &path, const RationalMetric &metric) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  write_metric(out, metric);
  if (!out.flush())
    throw Error(ErrorKind::IoError, "write failed for '" + path + "'");
}

}  // namespace isoforge
