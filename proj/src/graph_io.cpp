#include "sturan/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

namespace sturan {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kMaxSingleByteOrder = 62;

int decode_byte(std::string_view text, std::size_t at) {
  const auto c = static_cast<unsigned char>(text[at]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte " + std::to_string(c) + " outside [63,126]", at);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);

  std::size_t pos = base;
  if (pos >= text.size()) throw ParseError("graph6 record is empty", pos);

  // Order prefix: one byte, or 126 + 3 bytes, or 126 126 + 6 bytes.
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[pos]) != 126) {
    n = static_cast<std::size_t>(decode_byte(text, pos++));
  } else {
    std::size_t digits = 3;
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      digits = 6;
      ++pos;
    }
    if (pos + digits > text.size()) throw ParseError("truncated graph6 order prefix", text.size());
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | static_cast<std::size_t>(decode_byte(text, pos++));
  }
  if (n > kMaxOrder) throw ParseError("graph6 order " + std::to_string(n) + " exceeds supported maximum", base);

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body_bytes = (bit_count + 5) / 6;
  if (text.size() - pos != body_bytes)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(body_bytes),
                     text.size() < pos + body_bytes ? text.size() : pos + body_bytes);

  Graph g(n);
  std::size_t bit = 0;
  Vertex u = 0;
  Vertex v = 1;
  for (std::size_t i = 0; i < body_bytes; ++i) {
    const int value = decode_byte(text, pos + i);
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool on = (value >> shift) & 1;
      if (bit >= bit_count) {
        if (on) throw ParseError("nonzero graph6 padding bit", pos + i);
        continue;
      }
      if (on) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxSingleByteOrder)
    throw UnsupportedError("graph6 encoding supports order <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int value = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      value = (value << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  std::size_t next_number() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
    if (pos_ == text_.size()) throw ParseError("unexpected end of edge list", pos_);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) throw ParseError("expected a nonnegative integer", pos_);
    const std::size_t start = pos_;
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    last_ = start;
    return value;
  }

  bool at_end() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
    return pos_ == text_.size();
  }

  std::size_t last_offset() const noexcept { return last_; }
  std::size_t offset() const noexcept { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokenizer tok(text);
  const std::size_t n = tok.next_number();
  if (n > kMaxOrder) throw ParseError("edge list order exceeds supported maximum", tok.last_offset());
  const std::size_t m = tok.next_number();
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t u = tok.next_number();
    const std::size_t v = tok.next_number();
    if (!(u < v && v < n)) throw ParseError("edge requires 0 <= u < v < n", tok.last_offset());
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError("duplicate edge", tok.last_offset());
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!tok.at_end()) throw ParseError("trailing data after declared edges", tok.offset());
  return g;
}

std::string to_edge_list(const Graph& g) {
  const auto list = edges(g);
  std::string out = std::to_string(g.order()) + " " + std::to_string(list.size()) + "\n";
  for (auto [u, v] : list) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace sturan
