#pragma once

#include <string>

#include "cqcap/channel.hpp"
#include "cqcap/coding.hpp"

namespace cqcap {

// Channel files are JSON records
//   {"dim": d, "inputs": [{"label": "...", "state": M} | {"label": "...", "ket": v}, ...]}
// where a matrix literal M is a row-major array of rows of [re, im] pairs and
// a ket literal v is an array of [re, im] pairs (normalized, then turned into
// the rank-1 projector). Malformed input raises ValidationError.
CqChannel parse_channel_json(const std::string& text);
CqChannel load_channel(const std::string& path);
std::string channel_to_json(const CqChannel& w);
void save_channel(const CqChannel& w, const std::string& path);

// Code files are JSON records
//   {"n": int, "channel_ref": "...", "codewords": ["...", ...],
//    "decoder": [M, ...], "lambda": real}
// with one dense matrix literal per decoder element. A codeword string is
// the comma-separated list of input labels; when it contains no comma each
// character is read as one label.
Code parse_code_json(const std::string& text, const CqChannel& w);
Code load_code(const std::string& path, const CqChannel& w);
std::string code_to_json(const Code& code, const CqChannel& w, const std::string& channel_ref);
void save_code(const Code& code, const CqChannel& w, const std::string& channel_ref,
               const std::string& path);

} // namespace cqcap
