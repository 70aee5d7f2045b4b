#include "aaee/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "aaee/errors.hpp"

namespace aaee {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot writer assumes a little-endian host");

void put_u32(std::ostream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), 4);
}
void put_f64(std::ostream& out, double v) {
    out.write(reinterpret_cast<const char*>(&v), 8);
}

class Reader {
  public:
    Reader(std::istream& in, const std::string& path) : in_(in), path_(path) {}

    void read(void* dst, std::size_t n) {
        in_.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n)
            throw io_error(path_ + ": truncated at byte " +
                           std::to_string(offset_ + in_.gcount()));
        offset_ += n;
    }
    std::uint32_t u32() {
        std::uint32_t v;
        read(&v, 4);
        return v;
    }
    double f64() {
        double v;
        read(&v, 8);
        return v;
    }
    std::uint8_t u8() {
        std::uint8_t v;
        read(&v, 1);
        return v;
    }

  private:
    std::istream& in_;
    std::string path_;
    std::size_t offset_ = 0;
};

}  // namespace

void write_snapshot(const SimState& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open snapshot for writing: " + path);
    const Grid2D& g = state.u.grid();
    out.write("AAE2", 4);
    put_u32(out, 1);
    put_u32(out, static_cast<std::uint32_t>(g.nx));
    put_u32(out, static_cast<std::uint32_t>(g.ny));
    put_f64(out, g.lx);
    put_f64(out, g.ly);
    put_f64(out, state.t);
    bool has_xi = state.xi_flat.has_value();
    put_u32(out, has_xi ? 7u : 5u);
    std::uint8_t flags = has_xi ? 1u : 0u;
    out.write(reinterpret_cast<const char*>(&flags), 1);
    auto put_field = [&](const ScalarField& f) {
        out.write(reinterpret_cast<const char*>(f.v.data()),
                  static_cast<std::streamsize>(f.v.size() * sizeof(double)));
    };
    put_field(state.u.x);
    put_field(state.u.y);
    put_field(state.F.c11);
    put_field(state.F.c12);
    put_field(state.F.c22);
    if (has_xi) {
        put_field(state.xi_flat->c1);
        put_field(state.xi_flat->c2);
    }
    if (!out) throw io_error("write failed: " + path);
}

SimState read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open snapshot: " + path);
    Reader r(in, path);
    char magic[4];
    r.read(magic, 4);
    if (std::memcmp(magic, "AAE2", 4) != 0)
        throw io_error(path + ": bad magic, not a snapshot file");
    std::uint32_t version = r.u32();
    if (version != 1)
        throw io_error(path + ": unsupported format version " + std::to_string(version));
    std::uint32_t nx = r.u32();
    std::uint32_t ny = r.u32();
    double lx = r.f64();
    double ly = r.f64();
    double t = r.f64();
    std::uint32_t ncomp = r.u32();
    std::uint8_t flags = r.u8();
    bool has_xi = (flags & 1u) != 0;
    std::uint32_t expected = has_xi ? 7u : 5u;
    if (ncomp != expected)
        throw io_error(path + ": component count " + std::to_string(ncomp) +
                       " does not match flags (expected " + std::to_string(expected) +
                       ")");
    Grid2D g = make_grid(static_cast<int>(nx), static_cast<int>(ny), lx, ly);
    SimState s;
    s.t = t;
    s.u = VectorField(g);
    s.F = SymTensorField(g);
    auto get_field = [&](ScalarField& f) { r.read(f.v.data(), f.v.size() * sizeof(double)); };
    get_field(s.u.x);
    get_field(s.u.y);
    get_field(s.F.c11);
    get_field(s.F.c12);
    get_field(s.F.c22);
    if (has_xi) {
        s.xi_flat = OneFormField(g);
        get_field(s.xi_flat->c1);
        get_field(s.xi_flat->c2);
    }
    return s;
}

}  // namespace aaee
