#include "sccpref/apx.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "sccpref/errors.hpp"

namespace sccpref {

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string checked_name(std::string_view raw, std::size_t line) {
  const std::string_view name = trim(raw);
  if (name.empty()) throw ParseError(line, "empty argument name");
  for (char ch : name) {
    if (is_space(ch) || ch == ',' || ch == '(' || ch == ')' || ch == '%') {
      throw ParseError(line, "invalid argument name '" + std::string(name) + "'");
    }
  }
  return std::string(name);
}

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  // Skips whitespace and comments; false at end of input.
  bool skip_blank() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (is_space(ch)) {
        ++pos_;
      } else if (ch == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return true;
      }
    }
    return false;
  }

  std::string_view keyword() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char ch, std::string_view context) {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    if (pos_ >= text_.size() || text_[pos_] != ch) {
      throw ParseError(line_, "expected '" + std::string(1, ch) + "' " + std::string(context));
    }
    ++pos_;
  }

  std::string_view until_close() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ')') {
      if (text_[pos_] == '\n' || text_[pos_] == '(') throw ParseError(line_, "unterminated statement");
      ++pos_;
    }
    if (pos_ >= text_.size()) throw ParseError(line_, "unterminated statement");
    const std::string_view body = text_.substr(start, pos_ - start);
    ++pos_;
    return body;
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) {
  std::vector<std::string> arguments;
  std::unordered_set<std::string> declared;
  struct PendingAttack {
    std::string from, to;
    std::size_t line;
  };
  std::vector<PendingAttack> attacks;

  Scanner in(text);
  while (in.skip_blank()) {
    const std::size_t line = in.line();
    const std::string_view kw = in.keyword();
    if (kw != "arg" && kw != "att") throw ParseError(line, "expected arg(...) or att(...)");
    in.expect('(', "after " + std::string(kw));
    const std::string_view body = in.until_close();
    in.expect('.', "at end of statement");
    if (kw == "arg") {
      std::string name = checked_name(body, line);
      if (declared.insert(name).second) arguments.push_back(std::move(name));
    } else {
      const auto comma = body.find(',');
      if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError(line, "att(...) needs exactly two arguments");
      }
      attacks.push_back({checked_name(body.substr(0, comma), line), checked_name(body.substr(comma + 1), line), line});
    }
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(attacks.size());
  for (auto& a : attacks) {
    for (const std::string* endpoint : {&a.from, &a.to}) {
      if (!declared.count(*endpoint)) {
        throw ParseError(a.line, "attack mentions undeclared argument '" + *endpoint + "'");
      }
    }
    pairs.emplace_back(std::move(a.from), std::move(a.to));
  }
  return ArgumentationFramework::from_names(arguments, pairs);
}

ArgumentationFramework read_apx_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_apx(buffer.str());
}

void write_apx(const ArgumentationFramework& af, std::ostream& os) {
  for (ArgId id : af.arguments()) os << "arg(" << af.name(id) << ").\n";
  for (const auto& [a, b] : af.attacks()) os << "att(" << af.name(a) << ',' << af.name(b) << ").\n";
}

std::string to_apx(const ArgumentationFramework& af) {
  std::ostringstream os;
  write_apx(af, os);
  return os.str();
}

void print_extensions(const LabellingSet& result, const ArgumentationFramework& af, std::ostream& os) {
  std::vector<std::string> lines;
  lines.reserve(result.size());
  std::vector<std::string_view> names;
  for (const auto& lab : result) {
    names.clear();
    for (const auto& e : lab.entries()) {
      if (e.label == Label::In) names.push_back(af.name(e.arg));
    }
    std::sort(names.begin(), names.end());
    std::string line = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) line += ',';
      line += names[i];
    }
    line += ']';
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  os << "EXTENSIONS: " << lines.size() << '\n';
  for (const auto& l : lines) os << l << '\n';
}

std::string format_extensions(const LabellingSet& result, const ArgumentationFramework& af) {
  std::ostringstream os;
  print_extensions(result, af, os);
  return os.str();
}

}  // namespace sccpref
