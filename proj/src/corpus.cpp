#include "recurnlp/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "recurnlp/errors.hpp"

namespace recurnlp {

namespace {

bool is_word_codepoint(char32_t cp) {
    if (cp < 0x80)
        return std::isalnum(static_cast<unsigned char>(cp)) != 0 || cp == U'\'';
    if (cp == 0x2019) return true; // curly apostrophe
    if (cp < 0xC0) return false;   // Latin-1 punctuation and symbols
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (cp >= 0x2000 && cp <= 0x206F) return false; // general punctuation
    return true;
}

// Decodes one UTF-8 codepoint at text[pos]; advances pos. Invalid bytes
// decode as U+FFFD (a separator) and advance by one byte.
char32_t decode_utf8(std::string_view text, std::size_t& pos) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
    unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++pos;
        return 0xFFFD;
    }
    if (pos + static_cast<std::size_t>(len) > text.size()) {
        ++pos;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        unsigned char b = byte(pos + static_cast<std::size_t>(k));
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    pos += static_cast<std::size_t>(len);
    return cp;
}

void append_codepoint_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

} // namespace

TokenSequence TokenSequence::from_surfaces(const std::vector<std::string>& surfaces,
                                           std::string source_id) {
    TokenSequence seq;
    seq.source_id_ = std::move(source_id);
    seq.tokens_.reserve(surfaces.size());
    for (const auto& s : surfaces) {
        auto it = seq.surface_to_id_.find(s);
        TokenId id;
        if (it == seq.surface_to_id_.end()) {
            id = static_cast<TokenId>(seq.id_to_surface_.size());
            seq.surface_to_id_.emplace(s, id);
            seq.id_to_surface_.push_back(s);
        } else {
            id = it->second;
        }
        seq.tokens_.push_back(id);
    }
    return seq;
}

std::optional<TokenId> TokenSequence::id_of(std::string_view surface) const {
    auto it = surface_to_id_.find(std::string(surface));
    if (it == surface_to_id_.end()) return std::nullopt;
    return it->second;
}

std::string TokenSequence::joined() const {
    std::string out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (i) out.push_back(' ');
        out += surface(tokens_[i]);
    }
    return out;
}

TokenSequence tokenize(std::string_view text, const TokenizeOptions& opts,
                       std::string source_id) {
    std::vector<std::string> surfaces;
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char32_t cp = decode_utf8(text, pos);
        if (is_word_codepoint(cp)) {
            if (opts.lowercase && cp >= U'A' && cp <= U'Z') cp += 32;
            append_codepoint_utf8(current, cp);
        } else if (!current.empty()) {
            surfaces.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) surfaces.push_back(std::move(current));
    return TokenSequence::from_surfaces(surfaces, std::move(source_id));
}

TokenSequence slice_words(const TokenSequence& seq, std::size_t start, std::size_t end) {
    if (start > end)
        throw RangeError("slice start " + std::to_string(start) + " exceeds end " +
                         std::to_string(end));
    if (end > seq.size())
        throw RangeError("slice end " + std::to_string(end) + " exceeds length " +
                         std::to_string(seq.size()));
    std::vector<std::string> surfaces;
    surfaces.reserve(end - start);
    for (std::size_t i = start; i < end; ++i) surfaces.push_back(seq.surface(seq.token_at(i)));
    return TokenSequence::from_surfaces(surfaces, seq.source_id());
}

namespace {

// Minimal RFC-4180 reader: quoted fields may contain commas, doubled
// quotes and newlines. Returns one record per row; CR before LF is
// stripped from unquoted field ends.
std::vector<std::vector<std::string>> parse_csv(const std::string& data) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };
    for (std::size_t i = 0; i < data.size(); ++i) {
        char c = data[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && !field_started) {
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_record();
        } else {
            field.push_back(c);
            field_started = true;
        }
    }
    if (!field.empty() || !record.empty()) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        end_record();
    }
    return records;
}

} // namespace

CorpusManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open manifest: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    auto records = parse_csv(buf.str());
    if (records.empty()) throw ParseError("manifest is empty: " + path.string());
    const auto& header = records[0];
    if (header.size() != 3 || header[0] != "doc_id" || header[1] != "path" || header[2] != "label")
        throw ParseError("manifest row 1: expected header doc_id,path,label");

    CorpusManifest manifest;
    std::unordered_set<std::string> seen;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.size() == 1 && rec[0].empty()) continue; // trailing blank line
        if (rec.size() != 3)
            throw ParseError("manifest row " + std::to_string(r + 1) + ": expected 3 columns, got " +
                             std::to_string(rec.size()));
        if (!seen.insert(rec[0]).second)
            throw ParseError("manifest row " + std::to_string(r + 1) + ": duplicate doc_id '" +
                             rec[0] + "'");
        manifest.entries.push_back({rec[0], rec[1], rec[2]});
    }
    return manifest;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace recurnlp
