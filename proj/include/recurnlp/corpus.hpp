#ifndef RECURNLP_CORPUS_HPP
#define RECURNLP_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace recurnlp {

using TokenId = std::int32_t;

struct TokenizeOptions {
    bool lowercase = true; // ASCII A-Z only; non-ASCII passes through unchanged
};

// A text as a categorical series: token ids in document order plus a
// bijective id <-> surface table. Ids are dense, assigned by first
// appearance starting at 0. Immutable after construction.
class TokenSequence {
public:
    TokenSequence() = default;

    // Ingests surface strings in order, numbering by first appearance.
    static TokenSequence from_surfaces(const std::vector<std::string>& surfaces,
                                       std::string source_id = {});

    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }
    const std::vector<TokenId>& tokens() const { return tokens_; }
    TokenId token_at(std::size_t i) const { return tokens_[i]; }

    std::size_t vocab_size() const { return id_to_surface_.size(); }
    const std::string& surface(TokenId id) const { return id_to_surface_.at(static_cast<std::size_t>(id)); }
    std::optional<TokenId> id_of(std::string_view surface) const;

    const std::string& source_id() const { return source_id_; }

    // Surface stream joined by single spaces ("" for an empty sequence).
    std::string joined() const;

private:
    std::vector<TokenId> tokens_;
    std::vector<std::string> id_to_surface_;
    std::unordered_map<std::string, TokenId> surface_to_id_;
    std::string source_id_;
};

// Splits text into maximal runs of word characters and lowercases them
// when opts.lowercase (default). Word characters are, deterministically:
// ASCII letters, digits and apostrophe; U+2019 (treated as apostrophe);
// and non-ASCII codepoints except the Latin-1 punctuation/symbol block
// (U+0080-U+00BF, U+00D7, U+00F7) and general punctuation
// (U+2000-U+206F). Everything else separates tokens. Invalid UTF-8
// bytes act as separators. Empty text yields an empty sequence.
TokenSequence tokenize(std::string_view text, const TokenizeOptions& opts = {},
                       std::string source_id = {});

// tokens[start, end) with the vocabulary re-ingested (ids renumbered by
// first appearance within the slice). Throws RangeError naming the
// offending bound when start > end or end > N.
TokenSequence slice_words(const TokenSequence& seq, std::size_t start, std::size_t end);

struct ManifestEntry {
    std::string doc_id;
    std::string path;
    std::string label; // free genre string; ';' separates multiple genres
};

struct CorpusManifest {
    std::vector<ManifestEntry> entries; // file order
};

// CSV with header `doc_id,path,label`, UTF-8, LF or CRLF, RFC-4180
// quoting. Throws ParseError with the row number for malformed rows and
// names the id for duplicate doc_ids.
CorpusManifest load_manifest(const std::filesystem::path& path);

// Whole file as a string; throws IoError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

} // namespace recurnlp

#endif
