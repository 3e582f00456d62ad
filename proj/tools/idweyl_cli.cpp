// Command-line front end: decode / encode-check / enumerate / spheres /
// verify / count / weyl / render over plain text or JSON.

#include "idweyl/bitseq.hpp"
#include "idweyl/codes.hpp"
#include "idweyl/counting.hpp"
#include "idweyl/genins.hpp"
#include "idweyl/verify.hpp"
#include "idweyl/weyla.hpp"
#include "idweyl/weylb.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using idweyl::BigInt;
using idweyl::BitSeq;
using nlohmann::json;

std::string to_string_big(const BigInt& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

long long guard_limit(bool unsafe) {
    if (unsafe) {
        std::cerr << "warning: size guards lifted (--unsafe-max)\n";
        return 1000000;
    }
    if (const char* env = std::getenv("IDWEYL_MAX_SIZE")) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(env, &used);
            if (used != std::string(env).size() || v < 0)
                throw std::invalid_argument("not a size");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("IDWEYL_MAX_SIZE must be a non-negative integer");
        }
    }
    return 20;
}

void check_guard(long long size, long long limit, const std::string& what) {
    if (size > limit) {
        std::ostringstream os;
        os << "size guard refused " << what << " (" << size << " > " << limit
           << "); pass --unsafe-max or set IDWEYL_MAX_SIZE to widen";
        throw idweyl::GuardError(os.str());
    }
}

idweyl::CodeSpec spec_from_flags(const std::string& code, int n, int v, int h, int a) {
    if (code == "vt") {
        if (n < 1) throw std::invalid_argument("--code vt requires --n >= 1");
        return idweyl::CodeSpec::levenshtein(n, a);
    }
    if (v < 1 || h < 1)
        throw std::invalid_argument("--code " + code + " requires --v >= 1 and --h >= 1");
    return code == "path" ? idweyl::CodeSpec::path(v, h, a) : idweyl::CodeSpec::bad(v, h, a);
}

std::vector<int> parse_window(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(cur, &used);
            while (used < cur.size() && std::isspace(static_cast<unsigned char>(cur[used])))
                ++used;
            if (used != cur.size() || v == 0) throw std::invalid_argument("bad entry");
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("window entries must be comma-separated non-zero "
                                        "integers, e.g. \"2,-1,3\"");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty window");
    return out;
}

idweyl::SignedPerm perm_from_window(const std::string& text) {
    idweyl::SignedPerm w{parse_window(text)};
    std::vector<bool> seen(w.window.size(), false);
    for (int e : w.window) {
        int m = e < 0 ? -e : e;
        if (m < 1 || m > w.rank() || seen[static_cast<std::size_t>(m) - 1])
            throw std::invalid_argument(
                "window must use each axis 1..n exactly once, possibly negated");
        seen[static_cast<std::size_t>(m) - 1] = true;
    }
    return w;
}

std::string halves(const idweyl::Vec& doubled) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < doubled.size(); ++i) {
        if (i) os << ", ";
        if (doubled[i] % 2 == 0)
            os << doubled[i] / 2;
        else
            os << doubled[i] << "/2";
    }
    os << ")";
    return os.str();
}

std::string letters(const std::vector<int>& word) {
    std::ostringstream os;
    if (word.empty()) return "(empty)";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << " ";
        os << "s" << word[i];
    }
    return os.str();
}

std::vector<std::string> render_path(const BitSeq& x) {
    idweyl::require_bits(x);
    int v = static_cast<int>(x.size()) - idweyl::weight(x);
    int h = idweyl::weight(x);
    std::vector<std::string> canvas(2 * static_cast<std::size_t>(v) + 1,
                                    std::string(2 * static_cast<std::size_t>(h) + 1, ' '));
    std::size_t r = 0, c = 0;
    for (char b : x) {
        if (b == '1') {
            canvas[r][c + 1] = '-';
            c += 2;
        } else {
            canvas[r + 1][c] = '|';
            r += 2;
        }
    }
    std::vector<std::string> rows;
    for (std::string& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        if (!line.empty()) rows.push_back(std::move(line));
    }
    if (rows.empty()) rows.push_back("(empty path)");
    return rows;
}

struct TheoremEntry {
    int default_max;
    std::function<idweyl::CheckResult(int)> run;
};

const std::map<std::string, TheoremEntry>& theorem_table() {
    static const std::map<std::string, TheoremEntry> table = {
        {"perfect-vt", {12, [](int m) { return idweyl::check_vt_perfectness(m); }}},
        {"perfect-path", {9, [](int m) { return idweyl::check_path_perfectness(m); }}},
        {"perfect-bad", {9, [](int m) { return idweyl::check_bad_perfectness(m); }}},
        {"main1", {6, [](int m) { return idweyl::check_conjugation(m); }}},
        {"moment-length", {8, [](int m) { return idweyl::check_moment_length(m); }}},
        {"i1i2-k", {8, [](int m) { return idweyl::check_family_axioms_path(m); }}},
        {"i1i2-h", {8, [](int m) { return idweyl::check_family_axioms_h(m); }}},
        {"genfun", {10, [](int m) { return idweyl::check_genfun(m); }}},
        {"cardinalities", {14, [](int m) { return idweyl::check_cardinalities(m, m); }}},
        {"sphere-sizes", {8, [](int m) { return idweyl::check_sphere_sizes(m, 3, 20); }}},
        {"catalan-identity", {8, [](int m) { return idweyl::check_catalan(m, 5); }}},
    };
    return table;
}

void emit_list(bool as_json, json payload, const std::vector<BitSeq>& items,
               const char* key) {
    if (as_json) {
        payload[key] = items;
        payload["size"] = items.size();
        std::cout << payload.dump(2) << "\n";
    } else {
        for (const BitSeq& s : items) std::cout << s << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"residue codes for insertions/deletions and the reflection-group "
                 "structure behind them"};
    app.require_subcommand(1);
    // Long-form help only: -h is too close to the --h step-count option.
    app.set_help_flag("--help", "print help and exit");

    bool as_json = false;
    bool unsafe = false;

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help and exit");
        sub->add_flag("--json", as_json, "emit JSON instead of text");
        sub->add_flag("--unsafe-max", unsafe, "lift size guards (prints a warning)");
    };

    std::string code_kind, received, word, family = "standard", theorem, which, op, input,
                path_arg, x_arg;
    int n = 0, v = 0, h = 0, a = 0, t = 0, max_size = -1;

    CLI::App* decode = app.add_subcommand(
        "decode", "decode a received word against a residue code (for path/bad, --v/--h "
                  "give the received word's step counts; the code lives one insertion up)");
    decode->add_option("--code", code_kind, "vt, path, or bad")
        ->required()
        ->check(CLI::IsMember({"vt", "path", "bad"}));
    decode->add_option("--n", n, "code length (vt)");
    decode->add_option("--v", v, "received vertical steps (path/bad)");
    decode->add_option("--h", h, "received horizontal steps (path/bad)");
    decode->add_option("--a", a, "residue")->required();
    decode->add_option("--received", received, "received bit string")->required();
    add_common(decode);

    CLI::App* encode_check = app.add_subcommand(
        "encode-check", "test membership of a word in a residue code");
    encode_check->add_option("--code", code_kind, "vt, path, or bad")
        ->required()
        ->check(CLI::IsMember({"vt", "path", "bad"}));
    encode_check->add_option("--n", n, "code length (vt)");
    encode_check->add_option("--v", v, "code vertical steps (path/bad)");
    encode_check->add_option("--h", h, "code horizontal steps (path/bad)");
    encode_check->add_option("--a", a, "residue")->required();
    encode_check->add_option("--word", word, "candidate codeword")->required();
    add_common(encode_check);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all codewords of a code");
    enumerate->add_option("--code", code_kind, "vt, path, or bad")
        ->required()
        ->check(CLI::IsMember({"vt", "path", "bad"}));
    enumerate->add_option("--n", n, "code length (vt)");
    enumerate->add_option("--v", v, "code vertical steps (path/bad)");
    enumerate->add_option("--h", h, "code horizontal steps (path/bad)");
    enumerate->add_option("--a", a, "residue")->required();
    add_common(enumerate);

    CLI::App* spheres = app.add_subcommand(
        "spheres", "iterated insertion sphere of a word under one operator family");
    spheres->add_option("--family", family, "standard, path, or bai")
        ->check(CLI::IsMember({"standard", "path", "bai"}));
    spheres->add_option("--t", t, "number of insertion steps")->required();
    spheres->add_option("--x", x_arg, "starting bit string")->required();
    add_common(spheres);

    CLI::App* verify = app.add_subcommand("verify", "run one exhaustive range check");
    {
        std::vector<std::string> names;
        for (const auto& kv : theorem_table()) names.push_back(kv.first);
        verify->add_option("--theorem", theorem, "one of: perfect-vt, perfect-path, "
                           "perfect-bad, main1, moment-length, i1i2-k, i1i2-h, genfun, "
                           "cardinalities, sphere-sizes, catalan-identity")
            ->required()
            ->check(CLI::IsMember(names));
    }
    verify->add_option("--max-size", max_size,
                       "size bound (defaults to the promised range)");
    add_common(verify);

    CLI::App* count = app.add_subcommand("count", "exact cardinalities and sphere sizes");
    count->add_option("--which", which, "L (moment code), Y (path code), B (shuffled "
                      "path code), or sphere")
        ->required()
        ->check(CLI::IsMember({"L", "Y", "B", "sphere"}));
    count->add_option("--n", n, "length (L) or starting length (sphere)");
    count->add_option("--v", v, "vertical steps (Y/B)");
    count->add_option("--h", h, "horizontal steps (Y/B)");
    count->add_option("--a", a, "residue (L/Y/B)");
    count->add_option("--t", t, "insertion steps (sphere)");
    count->add_option("--family", family, "standard, path, or bai (sphere)")
        ->check(CLI::IsMember({"standard", "path", "bai"}));
    count->add_option("--x", x_arg, "starting word (sphere with --family path)");
    add_common(count);

    CLI::App* weyl = app.add_subcommand(
        "weyl", "signed-permutation utilities: reduced words, lengths, and the "
                "bit-string correspondence");
    weyl->add_option("--op", op, "reduced-word, length, or bijection")
        ->required()
        ->check(CLI::IsMember({"reduced-word", "length", "bijection"}));
    weyl->add_option("--input", input,
                     "window \"2,-1,3\" (reduced-word/length) or bit string (bijection)")
        ->required();
    add_common(weyl);

    CLI::App* render = app.add_subcommand("render", "draw a bit string as a lattice path");
    render->add_option("--path", path_arg, "bit string (1 = right, 0 = down)")->required();
    add_common(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        long long limit = guard_limit(unsafe);

        if (decode->parsed()) {
            BitSeq result;
            if (code_kind == "vt") {
                if (n < 1) throw std::invalid_argument("--code vt requires --n >= 1");
                check_guard(n, limit, "code length");
                if (received.size() + 1 == static_cast<std::size_t>(n))
                    result = idweyl::vt_decode_deletion(received, n, a);
                else if (received.size() == static_cast<std::size_t>(n) + 1)
                    result = idweyl::vt_decode_insertion(received, n, a);
                else
                    throw idweyl::DecodeError(
                        idweyl::DecodeError::Kind::NoCandidate,
                        "received length matches neither one deletion nor one insertion");
            } else {
                check_guard(v + h + 2, limit, "codeword length");
                result = code_kind == "path" ? idweyl::path_decode(received, v, h, a)
                                             : idweyl::bad_decode(received, v, h, a);
            }
            if (as_json)
                std::cout << json{{"codeword", result}}.dump(2) << "\n";
            else
                std::cout << result << "\n";
            return 0;
        }

        if (encode_check->parsed()) {
            idweyl::CodeSpec spec = spec_from_flags(code_kind, n, v, h, a);
            check_guard(spec.word_length(), limit, "word length");
            bool member = idweyl::membership(spec, word);
            long long stat = spec.kind == idweyl::CodeSpec::Kind::Levenshtein
                                 ? idweyl::moment(word)
                                 : spec.kind == idweyl::CodeSpec::Kind::Path
                                       ? idweyl::inversions(word)
                                       : idweyl::inversions(idweyl::azby_inverse(word));
            long long residue = ((stat % spec.modulus()) + spec.modulus()) % spec.modulus();
            if (as_json) {
                std::cout << json{{"member", member},
                                  {"residue", residue},
                                  {"expected", spec.a},
                                  {"modulus", spec.modulus()},
                                  {"code", spec.describe()}}
                                 .dump(2)
                          << "\n";
            } else if (member) {
                std::cout << word << " is a member of the " << spec.describe() << "\n";
            } else {
                std::cout << word << " is not a member of the " << spec.describe()
                          << ": residue " << residue << " != " << spec.a << "\n";
            }
            return member ? 0 : 1;
        }

        if (enumerate->parsed()) {
            idweyl::CodeSpec spec = spec_from_flags(code_kind, n, v, h, a);
            auto members = idweyl::enumerate_code(spec, static_cast<int>(limit));
            emit_list(as_json, json{{"code", spec.describe()}}, members, "codewords");
            return 0;
        }

        if (spheres->parsed()) {
            idweyl::require_bits(x_arg);
            if (t < 0) throw std::invalid_argument("--t must be non-negative");
            check_guard(static_cast<long long>(x_arg.size()) + 2LL * t, limit,
                        "target word length");
            idweyl::SphereFamily fam = family == "standard"
                                           ? idweyl::SphereFamily::Standard
                                           : family == "path" ? idweyl::SphereFamily::Path
                                                              : idweyl::SphereFamily::Bai;
            auto members = idweyl::iterated_sphere(x_arg, t, fam);
            emit_list(as_json, json{{"x", x_arg}, {"t", t}, {"family", family}}, members,
                      "members");
            return 0;
        }

        if (verify->parsed()) {
            const TheoremEntry& entry = theorem_table().at(theorem);
            int m = max_size < 0 ? entry.default_max : max_size;
            if (m > entry.default_max && !unsafe) {
                std::ostringstream os;
                os << "size guard refused --max-size " << m << " for " << theorem
                   << " (default " << entry.default_max << "); pass --unsafe-max to widen";
                throw idweyl::GuardError(os.str());
            }
            idweyl::CheckResult res = entry.run(m);
            if (as_json)
                std::cout << json{{"theorem", theorem},
                                  {"max_size", m},
                                  {"pass", res.pass},
                                  {"detail", res.detail}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << (res.pass ? "PASS" : "FAIL") << ": " << res.detail << "\n";
            return res.pass ? 0 : 1;
        }

        if (count->parsed()) {
            BigInt value;
            json extra;
            if (which == "L") {
                if (n < 1) throw std::invalid_argument("--which L requires --n >= 1");
                value = idweyl::card_levenshtein(n, a);
            } else if (which == "Y" || which == "B") {
                if (v < 1 || h < 1)
                    throw std::invalid_argument("--which " + which +
                                                " requires --v >= 1 and --h >= 1");
                value = idweyl::card_path_code(v, h, a);
            } else if (family == "path") {
                idweyl::require_bits(x_arg);
                check_guard(static_cast<long long>(x_arg.size()) + 2LL * t, limit,
                            "target word length");
                value = idweyl::iterated_sphere(x_arg, t, idweyl::SphereFamily::Path).size();
                extra["x"] = x_arg;
            } else {
                value = family == "standard" ? idweyl::sphere_size_standard(n, t)
                                             : idweyl::sphere_size_bai(n, t);
            }
            if (as_json) {
                json payload{{"which", which}, {"value", to_string_big(value)}};
                for (auto& kv : extra.items()) payload[kv.key()] = kv.value();
                std::cout << payload.dump(2) << "\n";
            } else {
                std::cout << value << "\n";
            }
            return 0;
        }

        if (weyl->parsed()) {
            if (op == "bijection") {
                idweyl::require_bits(input);
                int len = static_cast<int>(input.size());
                check_guard(len, limit, "rank");
                auto J = idweyl::bij_f01_inv(input);
                idweyl::MinusculeB w = idweyl::bij_fM(len, J);
                auto word_letters = idweyl::minuscule_word(w);
                idweyl::SignedPerm perm = idweyl::minuscule_perm(w);
                idweyl::Vec orbit = idweyl::bij_f12(len, J);
                if (as_json) {
                    std::cout << json{{"bits", input},
                                      {"subset", J},
                                      {"word", word_letters},
                                      {"window", perm.window},
                                      {"orbit_doubled", orbit},
                                      {"length", idweyl::length(perm)}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << "bits:    " << (input.empty() ? "(empty)" : input) << "\n";
                    std::cout << "subset:  {";
                    for (std::size_t i = 0; i < J.size(); ++i)
                        std::cout << (i ? ", " : "") << J[i];
                    std::cout << "}\n";
                    std::cout << "word:    " << letters(word_letters) << "\n";
                    std::cout << "window:  [";
                    for (std::size_t i = 0; i < perm.window.size(); ++i)
                        std::cout << (i ? ", " : "") << perm.window[i];
                    std::cout << "]\n";
                    std::cout << "orbit:   " << halves(orbit) << "\n";
                    std::cout << "length:  " << idweyl::length(perm) << "\n";
                }
                return 0;
            }
            idweyl::SignedPerm w = perm_from_window(input);
            check_guard(w.rank(), limit, "rank");
            if (op == "length") {
                if (as_json)
                    std::cout << json{{"length", idweyl::length(w)}}.dump(2) << "\n";
                else
                    std::cout << idweyl::length(w) << "\n";
            } else {
                auto word_letters = idweyl::reduced_word(w);
                if (as_json)
                    std::cout << json{{"word", word_letters},
                                      {"length", word_letters.size()}}
                                     .dump(2)
                              << "\n";
                else
                    std::cout << letters(word_letters) << "\n";
            }
            return 0;
        }

        if (render->parsed()) {
            check_guard(static_cast<long long>(path_arg.size()), limit, "path length");
            auto rows = render_path(path_arg);
            if (as_json) {
                int wt = idweyl::weight(path_arg);
                std::cout << json{{"path", path_arg},
                                  {"v", static_cast<int>(path_arg.size()) - wt},
                                  {"h", wt},
                                  {"inversions", idweyl::inversions(path_arg)},
                                  {"rows", rows}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const std::string& row : rows) std::cout << row << "\n";
            }
            return 0;
        }
    } catch (const idweyl::GuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 2;
    } catch (const idweyl::DecodeError& e) {
        std::cerr << "decode failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
