#include "kissing/permutation.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "kissing/text_format.hpp"

namespace kissing {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> hit(images_.size(), false);
  for (auto img : images_) {
    if (img >= images_.size() || hit[img]) throw std::invalid_argument("images do not form a bijection");
    hit[img] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<std::uint32_t> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  return Permutation(std::move(out));
}

Codeword Permutation::apply(const Codeword& word) const {
  if (word.length() != images_.size())
    throw std::invalid_argument("word length " + std::to_string(word.length()) + " differs from group degree " +
                                std::to_string(images_.size()));
  Codeword out(word.length());
  word.for_each_set([&](std::size_t i) { out.set(images_[i]); });
  return out;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  if (generators_.empty()) throw std::invalid_argument("a permutation group needs at least one generator");
  for (const auto& g : generators_)
    if (g.degree() != degree) throw std::invalid_argument("generator degree differs from group degree");
}

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::optional<std::uint64_t> PermutationGroup::order_by_closure(std::uint64_t limit) const {
  std::unordered_set<std::vector<std::uint32_t>, ImagesHash> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree_)};
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators_) {
        Permutation y = x * g;
        if (seen.insert(y.images()).second) {
          if (seen.size() > limit) return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

PermutationGroup product_action(const PermutationGroup& g1, const PermutationGroup& g2) {
  if (g1.generators().size() != g2.generators().size())
    throw std::invalid_argument("product_action: generator counts differ (" + std::to_string(g1.generators().size()) +
                                " vs " + std::to_string(g2.generators().size()) + ")");
  const std::size_t r = g1.degree(), s = g2.degree();
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < g1.generators().size(); ++k) {
    std::vector<std::uint32_t> images(r * s);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < s; ++j)
        images[i * s + j] = static_cast<std::uint32_t>(g1.generators()[k](static_cast<std::uint32_t>(i)) * s +
                                                       g2.generators()[k](static_cast<std::uint32_t>(j)));
    gens.emplace_back(std::move(images));
  }
  return PermutationGroup(r * s, std::move(gens));
}

PermutationGroup read_group(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw FormatError(reader.line_number(), "missing group header");
  const std::size_t header_line = reader.line_number();
  const Header header = parse_header(line, header_line);
  if (header.tag != "group") throw FormatError(header_line, "expected 'group' header");
  const auto degree = header.get_uint("degree", header_line);
  const auto count = header.get_uint("gens", header_line);
  std::vector<Permutation> gens;
  while (reader.next(line)) {
    const auto tokens = split_ws(line);
    if (tokens.size() != degree)
      throw FormatError(reader.line_number(), "expected " + std::to_string(degree) + " images, got " +
                                                  std::to_string(tokens.size()));
    std::vector<std::uint32_t> images;
    for (const auto& t : tokens)
      images.push_back(static_cast<std::uint32_t>(parse_uint(t, reader.line_number(), "image")));
    try {
      gens.emplace_back(std::move(images));
    } catch (const std::invalid_argument& e) {
      throw FormatError(reader.line_number(), e.what());
    }
  }
  if (gens.size() != count) throw FormatError(reader.line_number(), "header declares gens=" + std::to_string(count));
  return PermutationGroup(degree, std::move(gens));
}

PermutationGroup read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file " + path.string());
  try {
    return read_group(in);
  } catch (const FormatError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_group(std::ostream& out, const PermutationGroup& group) {
  out << "group degree=" << group.degree() << " gens=" << group.generators().size() << '\n';
  for (const auto& g : group.generators()) {
    for (std::size_t i = 0; i < g.degree(); ++i) out << (i ? " " : "") << g.images()[i];
    out << '\n';
  }
}

}  // namespace kissing
