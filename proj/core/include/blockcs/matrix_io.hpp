#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blockcs/block_matrix.hpp"
#include "blockcs/ternary.hpp"

namespace bcs::io {

// On disk a matrix is a pair of files: a Matrix Market coordinate payload
// (banner "%%MatrixMarket matrix coordinate integer general", 1-based
// indices, entries 1 or -1, sorted by column then row) and a JSON metadata
// sidecar next to it ("<basename>.meta.json") carrying the construction
// kind, its parameters, the declared overlap bound and a provenance chain
// of input digests. Writers are deterministic: the same matrix and
// metadata always produce identical bytes.

enum class Kind { devore, compose, signflip, hadamard, plan };

[[nodiscard]] std::string_view kind_name(Kind k);
[[nodiscard]] Kind kind_from_name(std::string_view name);

struct ProvenanceEntry {
    std::string kind;
    std::string digest; // fnv1a64 of the input's sidecar bytes

    friend bool operator==(const ProvenanceEntry&, const ProvenanceEntry&) = default;
};

struct FileMetadata {
    Kind kind{Kind::devore};
    std::map<std::string, std::int64_t> params; // p, r, k, r_prime, m as applicable
    std::uint64_t rows{0};
    std::uint64_t cols{0};
    std::optional<std::pair<Index, Index>> block; // (n, k) for block-structured payloads
    Index column_weight{0};
    Index overlap_bound{0};
    std::string density; // exact reduced rational, e.g. "1/6"
    std::vector<ProvenanceEntry> provenance;

    friend bool operator==(const FileMetadata&, const FileMetadata&) = default;
};

struct MatrixFile {
    std::variant<BlockBinaryMatrix, TernaryMatrix> matrix;
    FileMetadata meta;
};

// "<dir>/<stem>.meta.json" for "<dir>/<stem>.<ext>".
[[nodiscard]] std::filesystem::path sidecar_path(const std::filesystem::path& matrix_path);

// Exact serialized bytes; write_matrix_file emits exactly these.
[[nodiscard]] std::string payload_string(const MatrixFile& file);
[[nodiscard]] std::string metadata_string(const FileMetadata& meta);

// 64-bit FNV-1a, 16 lowercase hex digits; used for provenance digests.
[[nodiscard]] std::string fnv1a64(std::string_view bytes);

// Digest of the metadata that write_matrix_file would produce; inputs of a
// derived construction record this in their provenance chain.
[[nodiscard]] std::string metadata_digest(const FileMetadata& meta);

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);
[[nodiscard]] MatrixFile read_matrix_file(const std::filesystem::path& path);

// Builds metadata from a matrix plus construction info; shape, weight,
// block structure, bound and density are derived from the matrix.
[[nodiscard]] FileMetadata make_metadata(Kind kind,
                                         const std::map<std::string, std::int64_t>& params,
                                         const BlockBinaryMatrix& m,
                                         std::vector<ProvenanceEntry> provenance = {});
[[nodiscard]] FileMetadata make_metadata(Kind kind,
                                         const std::map<std::string, std::int64_t>& params,
                                         const TernaryMatrix& m,
                                         std::vector<ProvenanceEntry> provenance = {});

} // namespace bcs::io
