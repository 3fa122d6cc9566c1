#include "stablerep/irrep_cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace stablerep {

namespace {

constexpr char kMagic[8] = {'S', 'R', 'I', 'R', 'R', 'E', 'P', '\0'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  std::uint64_t get(int width) {
    if (pos_ + static_cast<std::size_t>(width) > bytes_.size())
      throw std::runtime_error("irrep cache: truncated file");
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += static_cast<std::size_t>(width);
    return v;
  }
  const std::uint8_t* raw(std::size_t n) {
    if (pos_ + n > bytes_.size()) throw std::runtime_error("irrep cache: truncated file");
    const std::uint8_t* p = bytes_.data() + pos_;
    pos_ += n;
    return p;
  }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_irrep(const IrrepMatrices& m) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  put_u32(out, kIrrepCacheVersion);
  put_u32(out, static_cast<std::uint32_t>(m.level()));
  put_u32(out, static_cast<std::uint32_t>(m.shape().length()));
  for (int p : m.shape().parts()) put_u32(out, static_cast<std::uint32_t>(p));
  put_u64(out, m.dimension());
  for (const auto& g : m.generators())
    for (Eigen::Index r = 0; r < g.rows(); ++r)
      for (Eigen::Index c = 0; c < g.cols(); ++c) put_u64(out, std::bit_cast<std::uint64_t>(g(r, c)));
  return out;
}

IrrepMatrices deserialize_irrep(const std::vector<std::uint8_t>& bytes) {
  Reader in(bytes);
  if (std::memcmp(in.raw(sizeof kMagic), kMagic, sizeof kMagic) != 0)
    throw std::runtime_error("irrep cache: bad magic");
  const auto version = static_cast<std::uint32_t>(in.get(4));
  if (version != kIrrepCacheVersion)
    throw std::runtime_error("irrep cache: unsupported format version " + std::to_string(version));
  const auto n = static_cast<int>(in.get(4));
  const auto len = static_cast<std::size_t>(in.get(4));
  if (len > static_cast<std::size_t>(n)) throw std::runtime_error("irrep cache: corrupt header");
  std::vector<int> parts(len);
  for (auto& p : parts) p = static_cast<int>(in.get(4));
  Partition lambda(parts);
  if (lambda.weight() != n) throw std::runtime_error("irrep cache: header weight mismatch");
  const auto d = static_cast<Eigen::Index>(in.get(8));
  if (static_cast<std::uint64_t>(d) != hook_dimension(lambda))
    throw std::runtime_error("irrep cache: header dimension mismatch");
  std::vector<Eigen::MatrixXd> gens;
  for (int i = 1; i < n; ++i) {
    Eigen::MatrixXd g(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) g(r, c) = std::bit_cast<double>(in.get(8));
    gens.push_back(std::move(g));
  }
  if (!in.done()) throw std::runtime_error("irrep cache: trailing bytes");
  return IrrepMatrices(std::move(lambda), std::move(gens));
}

std::string irrep_cache_filename(const Partition& lambda) {
  std::string name = "irrep_n" + std::to_string(lambda.weight()) + "_";
  if (lambda.empty()) return name + "empty.bin";
  for (std::size_t i = 0; i < lambda.length(); ++i) name += (i ? "-" : "") + std::to_string(lambda[i]);
  return name + ".bin";
}

std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t size, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

IrrepCache::IrrepCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

IrrepCache& IrrepCache::global() {
  static IrrepCache cache;
  return cache;
}

void IrrepCache::set_directory(std::optional<std::filesystem::path> directory) {
  std::lock_guard lock(mu_);
  directory_ = std::move(directory);
}

const IrrepMatrices& IrrepCache::get(const Partition& lambda) {
  std::lock_guard lock(mu_);
  if (auto it = tables_.find(lambda); it != tables_.end()) return *it->second;

  std::unique_ptr<IrrepMatrices> table;
  if (directory_) {
    const auto path = *directory_ / irrep_cache_filename(lambda);
    if (std::filesystem::exists(path)) {
      std::ifstream f(path, std::ios::binary);
      std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
      table = std::make_unique<IrrepMatrices>(deserialize_irrep(bytes));
      if (table->shape() != lambda) throw std::runtime_error("irrep cache: " + path.string() + " holds another shape");
    } else {
      table = std::make_unique<IrrepMatrices>(yor_matrices(lambda));
      std::filesystem::create_directories(*directory_);
      const auto bytes = serialize_irrep(*table);
      std::ofstream f(path, std::ios::binary | std::ios::trunc);
      f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
      if (!f) throw std::runtime_error("irrep cache: cannot write " + path.string());
    }
  } else {
    table = std::make_unique<IrrepMatrices>(yor_matrices(lambda));
  }
  auto [it, inserted] = tables_.emplace(lambda, std::move(table));
  return *it->second;
}

std::uint64_t IrrepCache::hash() const {
  std::lock_guard lock(mu_);
  if (tables_.empty()) return 0;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& [shape, table] : tables_) {
    const auto bytes = serialize_irrep(*table);
    h = fnv1a64(bytes.data(), bytes.size(), h);
  }
  return h;
}

std::vector<Partition> IrrepCache::shapes() const {
  std::lock_guard lock(mu_);
  std::vector<Partition> out;
  for (const auto& [shape, table] : tables_) out.push_back(shape);
  return out;
}

void IrrepCache::clear() {
  std::lock_guard lock(mu_);
  tables_.clear();
}

}  // namespace stablerep
