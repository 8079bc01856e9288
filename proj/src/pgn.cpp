#include "phoenix/pgn.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace phoenix {

namespace {

char piece_letter(PieceKind k) {
    switch (k) {
        case PieceKind::Knight: return 'N';
        case PieceKind::Bishop: return 'B';
        case PieceKind::Rook: return 'R';
        case PieceKind::Queen: return 'Q';
        case PieceKind::King: return 'K';
        default: return '?';
    }
}

bool is_capture_move(const Position& pos, const Move& m) {
    if (pos.board[static_cast<size_t>(m.to)] != 0) return true;
    return kind_of(pos.board[static_cast<size_t>(m.from)]) == PieceKind::Pawn &&
           m.to == pos.en_passant;
}

}  // namespace

std::string to_san(const Position& pos, const Move& m) {
    const auto legal = generate_legal_moves(pos);
    if (std::find(legal.begin(), legal.end(), m) == legal.end())
        throw Error("san: move " + to_uci(m) + " is not legal here");

    const PieceCode mover = pos.board[static_cast<size_t>(m.from)];
    const PieceKind kind = kind_of(mover);
    std::string san;

    if (kind == PieceKind::King && std::abs(m.to - m.from) == 2) {
        san = m.to > m.from ? "O-O" : "O-O-O";
    } else if (kind == PieceKind::Pawn) {
        if (is_capture_move(pos, m)) {
            san += static_cast<char>('a' + file_of(m.from));
            san += 'x';
        }
        san += square_name(m.to);
        if (m.promotion != PieceKind::None) {
            san += '=';
            san += piece_letter(m.promotion);
        }
    } else {
        san += piece_letter(kind);
        // Disambiguate against other same-kind pieces that reach the square.
        bool need_file = false, need_rank = false, ambiguous = false;
        for (const Move& other : legal) {
            if (other == m || other.to != m.to) continue;
            if (pos.board[static_cast<size_t>(other.from)] != mover) continue;
            ambiguous = true;
            if (file_of(other.from) == file_of(m.from)) need_rank = true;
            if (rank_of(other.from) == rank_of(m.from)) need_file = true;
        }
        if (ambiguous && !need_file && !need_rank) need_file = true;
        if (need_file) san += static_cast<char>('a' + file_of(m.from));
        if (need_rank) san += static_cast<char>('1' + rank_of(m.from));
        if (is_capture_move(pos, m)) san += 'x';
        san += square_name(m.to);
    }

    const Position next = pos.apply_unchecked(m);
    if (next.in_check(next.side_to_move))
        san += generate_legal_moves(next).empty() ? '#' : '+';
    return san;
}

Move san_to_move(const Position& pos, const std::string& san) {
    std::string wanted = san;
    while (!wanted.empty() && (wanted.back() == '+' || wanted.back() == '#' ||
                               wanted.back() == '!' || wanted.back() == '?'))
        wanted.pop_back();
    for (const Move& m : generate_legal_moves(pos)) {
        std::string candidate = to_san(pos, m);
        while (!candidate.empty() && (candidate.back() == '+' || candidate.back() == '#'))
            candidate.pop_back();
        if (candidate == wanted) return m;
    }
    throw Error("san: '" + san + "' matches no legal move in " + pos.fen());
}

const std::string* PgnGame::tag(const std::string& name) const {
    for (const auto& [key, value] : tags)
        if (key == name) return &value;
    return nullptr;
}

namespace {

std::string escape_tag(const std::string& value) {
    std::string out;
    for (const char c : value) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

void write_pgn_game(std::ostream& out, const PgnHeader& header, const Position& opening,
                    std::span<const Move> moves, const std::string& result) {
    const auto tag = [&](const char* name, const std::string& value) {
        out << '[' << name << " \"" << escape_tag(value) << "\"]\n";
    };
    tag("Event", header.event);
    tag("Site", header.site);
    tag("Date", header.date);
    tag("Round", header.round);
    tag("White", header.white);
    tag("Black", header.black);
    tag("Result", result);
    const std::string opening_fen = opening.fen();
    if (opening_fen != START_FEN) {
        tag("SetUp", "1");
        tag("FEN", opening_fen);
    }
    out << '\n';

    std::string line;
    const auto emit = [&](const std::string& token) {
        if (line.empty()) {
            line = token;
        } else if (line.size() + 1 + token.size() > 80) {
            out << line << '\n';
            line = token;
        } else {
            line += ' ';
            line += token;
        }
    };

    Position pos = opening;
    for (const Move& m : moves) {
        std::string token;
        if (pos.side_to_move == Color::White)
            token = std::to_string(pos.fullmove_number) + ". ";
        else if (pos == opening)
            token = std::to_string(pos.fullmove_number) + "... ";
        token += to_san(pos, m);
        emit(token);
        pos = pos.apply(m);
    }
    emit(result);
    if (!line.empty()) out << line << '\n';
    out << '\n';
}

namespace {

bool is_result_token(const std::string& t) {
    return t == "1-0" || t == "0-1" || t == "1/2-1/2" || t == "*";
}

// Reads one bracketed tag pair starting after '['.
bool parse_tag(std::istream& in, std::string& name, std::string& value) {
    name.clear();
    value.clear();
    char c;
    while (in.get(c) && c != '"' && c != ']')
        if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    if (c != '"') return false;
    while (in.get(c) && c != '"') {
        if (c == '\\' && in.peek() != EOF) in.get(c);
        value += c;
    }
    while (in.get(c) && c != ']') {
    }
    return true;
}

}  // namespace

std::vector<PgnGame> read_pgn(std::istream& in) {
    std::vector<PgnGame> games;
    PgnGame current;
    bool in_game = false;
    int variation_depth = 0;

    const auto finish = [&] {
        if (in_game) {
            if (current.result.empty()) current.result = "*";
            games.push_back(std::move(current));
            current = PgnGame{};
            in_game = false;
        }
    };

    char c;
    while (in.get(c)) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[' && variation_depth == 0) {
            // A tag after movetext starts the next game.
            if (in_game && (!current.san_moves.empty() || !current.result.empty())) finish();
            std::string name, value;
            if (parse_tag(in, name, value)) {
                current.tags.emplace_back(std::move(name), std::move(value));
                in_game = true;
            }
            continue;
        }
        if (c == '{') {
            while (in.get(c) && c != '}') {
            }
            continue;
        }
        if (c == ';') {
            while (in.get(c) && c != '\n') {
            }
            continue;
        }
        if (c == '(') {
            ++variation_depth;
            continue;
        }
        if (c == ')') {
            if (variation_depth > 0) --variation_depth;
            continue;
        }

        std::string token(1, c);
        while (in.get(c) && !std::isspace(static_cast<unsigned char>(c)) && c != '{' &&
               c != ';' && c != '(' && c != ')')
            token += c;
        if (in && (c == '{' || c == ';' || c == '(' || c == ')')) in.unget();

        if (variation_depth > 0) continue;
        if (token.empty() || token[0] == '$') continue;
        if (is_result_token(token)) {
            in_game = true;
            current.result = token;
            finish();
            continue;
        }
        // Strip leading move numbers such as "12." or "12..."
        size_t i = 0;
        while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
        if (i > 0 && i < token.size() && token[i] == '.') {
            while (i < token.size() && token[i] == '.') ++i;
            token = token.substr(i);
            if (token.empty()) continue;
        } else if (i == token.size()) {
            continue;  // bare move number
        }
        in_game = true;
        current.san_moves.push_back(token);
    }
    finish();
    return games;
}

std::vector<PgnGame> read_pgn_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("pgn: cannot open '" + path + "'");
    return read_pgn(in);
}

}  // namespace phoenix
