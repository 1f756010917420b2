#include "starchrome/graph6.hpp"

#include "starchrome/errors.hpp"

namespace starchrome {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw TooLarge("graph6 encoder handles n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& raw) {
  std::string text = raw;
  if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  if (text.empty()) throw MalformedText("empty graph6 string");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw MalformedText("graph6 byte out of range in '" + text + "'");
  const int n = text[0] - 63;
  if (n == 63) throw TooLarge("graph6 strings with n > 62 are not supported");
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size()) != 1 + bytes)
    throw MalformedText("graph6 length mismatch: n=" + std::to_string(n) + " needs " +
                        std::to_string(1 + bytes) + " bytes, got " + std::to_string(text.size()));
  std::vector<Edge> es;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  // padding bits must be zero
  if (bits % 6 != 0) {
    int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw MalformedText("nonzero graph6 padding bits");
  }
  return Graph::from_edges(n, es);
}

}  // namespace starchrome
