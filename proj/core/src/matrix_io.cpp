#include "blockcs/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blockcs/analysis.hpp"

namespace bcs::io {

using nlohmann::json;

namespace {

constexpr std::string_view kBanner = "%%MatrixMarket matrix coordinate integer general";

struct Entry {
    std::uint64_t row;
    std::uint64_t col;
    int value;
};

std::vector<Entry> collect_entries(const MatrixFile& file) {
    std::vector<Entry> entries;
    if (const auto* b = std::get_if<BlockBinaryMatrix>(&file.matrix)) {
        for (std::size_t c = 0; c < b->column_count(); ++c)
            for (const Index row : b->column_support(c)) entries.push_back({row, c + 1, 1});
    } else {
        const auto& t = std::get<TernaryMatrix>(file.matrix);
        for (std::size_t c = 0; c < t.column_count(); ++c) {
            const auto rows = t.column_rows(c);
            const auto signs = t.column_signs(c);
            for (std::size_t s = 0; s < rows.size(); ++s)
                entries.push_back({rows[s], c + 1, signs[s]});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    return entries;
}

json params_to_json(const std::map<std::string, std::int64_t>& params) {
    json j = json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << bytes;
    if (!out) throw Error("short write to " + path.string());
}

FileMetadata parse_metadata(const std::string& bytes, const std::filesystem::path& origin) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::exception& e) {
        throw ParseError("bad metadata in " + origin.string() + ": " + e.what());
    }
    try {
        FileMetadata meta;
        meta.kind = kind_from_name(j.at("kind").get<std::string>());
        for (const auto& [key, value] : j.at("params").items())
            meta.params[key] = value.get<std::int64_t>();
        meta.rows = j.at("shape").at(0).get<std::uint64_t>();
        meta.cols = j.at("shape").at(1).get<std::uint64_t>();
        if (!j.at("block").is_null())
            meta.block = {{j.at("block").at("n").get<Index>(),
                           j.at("block").at("k").get<Index>()}};
        meta.column_weight = j.at("weight").get<Index>();
        meta.overlap_bound = j.at("overlap_bound").get<Index>();
        meta.density = j.at("density").get<std::string>();
        for (const auto& p : j.at("provenance"))
            meta.provenance.push_back(
                {p.at("kind").get<std::string>(), p.at("digest").get<std::string>()});
        return meta;
    } catch (const json::exception& e) {
        throw ParseError("bad metadata in " + origin.string() + ": " + e.what());
    }
}

} // namespace

std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::devore: return "devore";
        case Kind::compose: return "compose";
        case Kind::signflip: return "signflip";
        case Kind::hadamard: return "hadamard";
        case Kind::plan: return "plan";
    }
    throw Error("unreachable construction kind");
}

Kind kind_from_name(std::string_view name) {
    if (name == "devore") return Kind::devore;
    if (name == "compose") return Kind::compose;
    if (name == "signflip") return Kind::signflip;
    if (name == "hadamard") return Kind::hadamard;
    if (name == "plan") return Kind::plan;
    throw ParseError("unknown construction kind '" + std::string(name) + "'");
}

std::filesystem::path sidecar_path(const std::filesystem::path& matrix_path) {
    std::filesystem::path p = matrix_path;
    p.replace_extension();
    p += ".meta.json";
    return p;
}

std::string payload_string(const MatrixFile& file) {
    const auto entries = collect_entries(file);
    std::uint64_t rows = 0, cols = 0;
    if (const auto* b = std::get_if<BlockBinaryMatrix>(&file.matrix)) {
        rows = b->row_count();
        cols = b->column_count();
    } else {
        const auto& t = std::get<TernaryMatrix>(file.matrix);
        rows = t.row_count();
        cols = t.column_count();
    }
    std::ostringstream os;
    os << kBanner << "\n" << rows << " " << cols << " " << entries.size() << "\n";
    for (const Entry& e : entries) os << e.row << " " << e.col << " " << e.value << "\n";
    return os.str();
}

std::string metadata_string(const FileMetadata& meta) {
    json j;
    j["kind"] = std::string(kind_name(meta.kind));
    j["params"] = params_to_json(meta.params);
    j["shape"] = {meta.rows, meta.cols};
    if (meta.block)
        j["block"] = {{"n", meta.block->first}, {"k", meta.block->second}};
    else
        j["block"] = nullptr;
    j["weight"] = meta.column_weight;
    j["overlap_bound"] = meta.overlap_bound;
    j["density"] = meta.density;
    json prov = json::array();
    for (const auto& p : meta.provenance) prov.push_back({{"kind", p.kind}, {"digest", p.digest}});
    j["provenance"] = prov;
    return j.dump(2) + "\n";
}

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string metadata_digest(const FileMetadata& meta) { return fnv1a64(metadata_string(meta)); }

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
    write_file(path, payload_string(file));
    write_file(sidecar_path(path), metadata_string(file.meta));
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
    const FileMetadata meta = parse_metadata(read_file(sidecar_path(path)), sidecar_path(path));

    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line) || line != kBanner)
        throw ParseError(path.string() + ": missing or wrong Matrix Market banner");
    do {
        if (!std::getline(in, line))
            throw ParseError(path.string() + ": missing size line");
    } while (!line.empty() && line[0] == '%');

    std::uint64_t rows = 0, cols = 0, nnz = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> rows >> cols >> nnz)) throw ParseError(path.string() + ": bad size line");
    }
    if (rows != meta.rows || cols != meta.cols)
        throw ParseError(path.string() + ": payload shape " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " does not match metadata");

    std::vector<std::vector<std::pair<Index, int>>> columns(cols);
    for (std::uint64_t i = 0; i < nnz; ++i) {
        std::uint64_t r = 0, c = 0;
        int v = 0;
        if (!(in >> r >> c >> v)) throw ParseError(path.string() + ": truncated entry list");
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw ParseError(path.string() + ": entry index out of range");
        if (v != 1 && v != -1) throw ParseError(path.string() + ": entry value must be 1 or -1");
        columns[c - 1].emplace_back(static_cast<Index>(r), v);
    }
    {
        std::uint64_t extra_r = 0;
        if (in >> extra_r) throw ParseError(path.string() + ": trailing entries beyond count");
    }

    const bool ternary_kind = meta.kind == Kind::signflip || meta.kind == Kind::hadamard;
    if (meta.block && meta.column_weight != meta.block->second)
        throw ParseError(path.string() + ": metadata weight differs from the block count");
    try {
        if (!ternary_kind) {
            if (!meta.block) throw ParseError(path.string() + ": binary file without block info");
            std::vector<std::vector<Index>> supports(cols);
            for (std::uint64_t c = 0; c < cols; ++c) {
                for (const auto& [r, v] : columns[c]) {
                    if (v != 1)
                        throw ParseError(path.string() + ": negative entry in a binary file");
                    supports[c].push_back(r);
                }
            }
            auto matrix = BlockBinaryMatrix::from_column_supports(
                meta.block->first, meta.block->second, supports, meta.overlap_bound);
            if (matrix.row_count() != rows)
                throw ParseError(path.string() + ": block structure does not match shape");
            return {std::move(matrix), meta};
        }

        std::vector<Index> row_idx;
        std::vector<std::int8_t> signs;
        row_idx.reserve(nnz);
        signs.reserve(nnz);
        for (std::uint64_t c = 0; c < cols; ++c) {
            auto col = columns[c];
            std::sort(col.begin(), col.end());
            if (col.size() != meta.column_weight)
                throw ParseError(path.string() + ": column " + std::to_string(c + 1) +
                                 " weight differs from metadata");
            for (const auto& [r, v] : col) {
                row_idx.push_back(r);
                signs.push_back(static_cast<std::int8_t>(v));
            }
        }
        TernaryMatrix matrix = [&] {
            if (!meta.block)
                return TernaryMatrix::from_sparse_columns(rows, meta.column_weight,
                                                          std::move(row_idx), std::move(signs),
                                                          meta.overlap_bound);
            const Index n = meta.block->first;
            const Index k = meta.block->second;
            std::vector<Index> pos(row_idx.size());
            for (std::size_t i = 0; i < row_idx.size(); ++i) {
                const Index block = static_cast<Index>(i % k); // entries sorted by row
                if ((row_idx[i] - 1) / n != block)
                    throw ParseError(path.string() + ": column " +
                                     std::to_string(i / k + 1) +
                                     " does not have one entry per block");
                pos[i] = (row_idx[i] - 1) % n + 1;
            }
            return TernaryMatrix::from_block_columns(n, k, std::move(pos), signs,
                                                     meta.overlap_bound);
        }();
        if (matrix.row_count() != rows)
            throw ParseError(path.string() + ": block structure does not match shape");
        return {std::move(matrix), meta};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

FileMetadata make_metadata(Kind kind, const std::map<std::string, std::int64_t>& params,
                           const BlockBinaryMatrix& m, std::vector<ProvenanceEntry> provenance) {
    FileMetadata meta;
    meta.kind = kind;
    meta.params = params;
    meta.rows = m.row_count();
    meta.cols = m.column_count();
    meta.block = {{m.block_size(), m.block_count()}};
    meta.column_weight = m.block_count();
    meta.overlap_bound = m.overlap_bound();
    meta.density = density(m).str();
    meta.provenance = std::move(provenance);
    return meta;
}

FileMetadata make_metadata(Kind kind, const std::map<std::string, std::int64_t>& params,
                           const TernaryMatrix& m, std::vector<ProvenanceEntry> provenance) {
    FileMetadata meta;
    meta.kind = kind;
    meta.params = params;
    meta.rows = m.row_count();
    meta.cols = m.column_count();
    if (m.has_block_structure()) meta.block = {{m.block_size(), m.block_count()}};
    meta.column_weight = m.column_weight();
    meta.overlap_bound = m.overlap_bound();
    meta.density = density(m).str();
    meta.provenance = std::move(provenance);
    return meta;
}

} // namespace bcs::io
