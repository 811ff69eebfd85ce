#include "stl/index_io.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

namespace stl {
namespace {

constexpr char kMagic[4] = {'S', 'T', 'L', '1'};
constexpr uint32_t kVersion = 1;

// Serializes little-endian integers into a buffer while folding them into
// an incremental crc32.
class Writer {
public:
    template <typename T>
    void num(T value) {
        static_assert(std::is_unsigned_v<T>);
        unsigned char bytes[sizeof(T)];
        for (size_t i = 0; i < sizeof(T); ++i)
            bytes[i] = (unsigned char)(value >> (8 * i));
        buf_.insert(buf_.end(), bytes, bytes + sizeof(T));
    }

    const std::vector<unsigned char>& bytes() const { return buf_; }

private:
    std::vector<unsigned char> buf_;
};

class Reader {
public:
    Reader(const unsigned char* data, size_t size) : data_(data), size_(size) {}

    template <typename T>
    T num() {
        static_assert(std::is_unsigned_v<T>);
        if (size_ - pos_ < sizeof(T)) throw IndexError("truncated index file");
        T value = 0;
        for (size_t i = 0; i < sizeof(T); ++i)
            value |= T(data_[pos_ + i]) << (8 * i);
        pos_ += sizeof(T);
        return value;
    }

    size_t remaining() const { return size_ - pos_; }

private:
    const unsigned char* data_;
    size_t size_;
    size_t pos_ = 0;
};

}  // namespace

void save_index(const std::string& path, const Index& idx) {
    const Hierarchy& h = idx.hierarchy;
    const Labelling& l = idx.labelling;
    size_t n = h.num_vertices();

    Writer w;
    w.num<uint32_t>(kVersion);
    w.num<uint64_t>(n);
    w.num<uint64_t>(idx.graph.num_edges());
    w.num<uint64_t>(std::bit_cast<uint64_t>(idx.meta.beta));
    w.num<uint32_t>(idx.meta.leaf_threshold);
    w.num<uint64_t>(idx.meta.seed);

    for (vertex_t v = 0; v < n; ++v) {
        auto nbs = idx.graph.neighbors(v);
        w.num<uint32_t>(uint32_t(nbs.size()));
        for (const Neighbor& nb : nbs) {
            w.num<uint32_t>(nb.to);
            w.num<uint32_t>(nb.weight);
        }
    }

    w.num<uint32_t>(uint32_t(h.num_nodes()));
    for (uint32_t id = 0; id < h.num_nodes(); ++id) {
        const HierNode& node = h.nodes()[id];
        w.num<uint32_t>(node.parent);
        w.num<uint32_t>(node.cut_size);
    }
    for (vertex_t v : h.cut_pool()) w.num<uint32_t>(v);

    for (uint64_t o : l.offsets()) w.num<uint64_t>(o);
    for (distance_t d : l.data()) w.num<uint64_t>(d);

    uint32_t crc = (uint32_t)crc32(0, w.bytes().data(), (uInt)w.bytes().size());

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(kMagic, sizeof(kMagic));
    out.write((const char*)w.bytes().data(), (std::streamsize)w.bytes().size());
    unsigned char trailer[4];
    for (size_t i = 0; i < 4; ++i) trailer[i] = (unsigned char)(crc >> (8 * i));
    out.write((const char*)trailer, 4);
    if (!out) throw std::runtime_error("write failed for " + path);
}

Index load_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<unsigned char> file((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (file.size() < sizeof(kMagic) + 4 ||
        std::memcmp(file.data(), kMagic, sizeof(kMagic)) != 0)
        throw IndexError("not an index file");

    const unsigned char* payload = file.data() + sizeof(kMagic);
    size_t payload_size = file.size() - sizeof(kMagic) - 4;
    uint32_t stored = 0;
    for (size_t i = 0; i < 4; ++i)
        stored |= uint32_t(file[file.size() - 4 + i]) << (8 * i);
    uint32_t actual = (uint32_t)crc32(0, payload, (uInt)payload_size);
    if (stored != actual) throw IndexError("checksum mismatch");

    Reader r(payload, payload_size);
    uint32_t version = r.num<uint32_t>();
    if (version != kVersion)
        throw IndexError("unsupported index version " + std::to_string(version));

    Index idx;
    uint64_t n = r.num<uint64_t>();
    uint64_t m = r.num<uint64_t>();
    idx.meta.beta = std::bit_cast<double>(r.num<uint64_t>());
    idx.meta.leaf_threshold = r.num<uint32_t>();
    idx.meta.seed = r.num<uint64_t>();
    if (n > UINT32_MAX) throw IndexError("vertex count out of range");

    std::vector<std::vector<Neighbor>> adj(n);
    for (uint64_t v = 0; v < n; ++v) {
        uint32_t deg = r.num<uint32_t>();
        adj[v].reserve(deg);
        for (uint32_t i = 0; i < deg; ++i) {
            uint32_t to = r.num<uint32_t>();
            uint32_t weight = r.num<uint32_t>();
            adj[v].push_back({to, weight});
        }
    }
    try {
        idx.graph = Graph::from_adjacency(std::move(adj));
    } catch (const std::invalid_argument& e) {
        throw IndexError(std::string("bad graph: ") + e.what());
    }
    if (idx.graph.num_edges() != m) throw IndexError("edge count mismatch");

    uint32_t num_nodes = r.num<uint32_t>();
    std::vector<AssembleNode> nodes(num_nodes);
    std::vector<uint32_t> cut_sizes(num_nodes);
    for (uint32_t id = 0; id < num_nodes; ++id) {
        nodes[id].parent = r.num<uint32_t>();
        cut_sizes[id] = r.num<uint32_t>();
    }
    for (uint32_t id = 0; id < num_nodes; ++id) {
        nodes[id].cut.resize(cut_sizes[id]);
        for (uint32_t& v : nodes[id].cut) v = r.num<uint32_t>();
    }
    try {
        idx.hierarchy = Hierarchy::assemble(n, nodes);
    } catch (const std::invalid_argument& e) {
        throw IndexError(std::string("bad hierarchy: ") + e.what());
    }

    std::vector<uint64_t> offsets(n + 1);
    for (uint64_t& o : offsets) o = r.num<uint64_t>();
    for (uint64_t v = 0; v < n; ++v)
        if (offsets[v + 1] - offsets[v] != idx.hierarchy.label_len(vertex_t(v)))
            throw IndexError("label layout mismatch");
    std::vector<distance_t> data(offsets[n]);
    for (distance_t& d : data) d = r.num<uint64_t>();
    if (r.remaining() != 0) throw IndexError("trailing bytes in index file");

    idx.labelling.adopt(std::move(offsets), std::move(data));
    return idx;
}

}  // namespace stl
