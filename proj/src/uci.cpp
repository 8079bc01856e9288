#include "phoenix/uci.hpp"

#include <atomic>
#include <cmath>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "phoenix/genome.hpp"
#include "phoenix/search.hpp"

namespace phoenix {

namespace {

PvtSet pvt_from_store(const std::string& store_path, const std::string& chromosome_id) {
    if (store_path.empty()) {
        if (!chromosome_id.empty())
            throw Error("uci: chromosome '" + chromosome_id + "' requested without a store");
        return PvtSet{};  // material-only play
    }
    const auto records = load_store(store_path);
    if (records.empty()) {
        if (!chromosome_id.empty())
            throw Error("uci: chromosome '" + chromosome_id + "' not found in empty store");
        return PvtSet{};
    }
    if (chromosome_id.empty()) {
        const StoredChromosome* best = &records.front();
        for (const auto& rec : records)
            if (rec.fitness > best->fitness) best = &rec;
        return unflatten(best->genes);
    }
    for (const auto& rec : records)
        if (rec.id == chromosome_id) return unflatten(rec.genes);
    throw Error("uci: chromosome '" + chromosome_id + "' not found in '" + store_path + "'");
}

class Session {
public:
    Session(std::istream& in, std::ostream& out, const std::string& store_path,
            const std::string& chromosome_id)
        : in_(in),
          out_(out),
          store_path_(store_path),
          position_(Position::startpos()) {
        SearchOptions options;
        options.tt_entries = 1 << 20;
        searcher_ = std::make_unique<Searcher>(pvt_from_store(store_path, chromosome_id), options);
    }

    ~Session() { stop_search(); }

    int run() {
        std::string line;
        while (std::getline(in_, line)) {
            std::istringstream words(line);
            std::string command;
            if (!(words >> command)) continue;
            if (command == "quit") break;
            if (command == "uci") handle_uci();
            else if (command == "isready") send("readyok");
            else if (command == "ucinewgame") handle_newgame();
            else if (command == "position") handle_position(words);
            else if (command == "go") handle_go(words);
            else if (command == "stop") stop_search();
            else if (command == "setoption") handle_setoption(words);
            // anything else is silently ignored, per protocol convention
        }
        stop_search();
        return 0;
    }

private:
    void send(const std::string& line) {
        std::lock_guard lock(out_mutex_);
        out_ << line << '\n';
        out_.flush();
    }

    void handle_uci() {
        send("id name Phoenix");
        send("id author Phoenix developers");
        send("option name Chromosome type string default <empty>");
        send("uciok");
    }

    void handle_newgame() {
        stop_search();
        searcher_->new_game();
        position_ = Position::startpos();
    }

    void handle_position(std::istringstream& words) {
        stop_search();
        std::string token;
        if (!(words >> token)) {
            send("info string ignoring malformed position command");
            return;
        }
        Position next;
        if (token == "startpos") {
            next = Position::startpos();
            words >> token;  // optional "moves"
        } else if (token == "fen") {
            std::string fen, part;
            int fields = 0;
            while (fields < 6 && words >> part) {
                if (part == "moves") break;
                if (!fen.empty()) fen += ' ';
                fen += part;
                ++fields;
            }
            token = part;
            try {
                next = Position::from_fen(fen);
            } catch (const Error& e) {
                send(std::string("info string ignoring position: ") + e.what());
                return;
            }
        } else {
            send("info string ignoring malformed position command");
            return;
        }
        if (token == "moves") {
            std::string move_text;
            while (words >> move_text) {
                const auto parsed = move_from_uci(move_text);
                if (!parsed) {
                    send("info string ignoring unparsable move " + move_text);
                    return;
                }
                try {
                    next = next.apply(*parsed);
                } catch (const Error& e) {
                    send(std::string("info string ignoring position: ") + e.what());
                    return;
                }
            }
        }
        position_ = next;
    }

    void handle_setoption(std::istringstream& words) {
        std::string token, name, value;
        words >> token;  // "name"
        while (words >> token && token != "value") {
            if (!name.empty()) name += ' ';
            name += token;
        }
        while (words >> token) {
            if (!value.empty()) value += ' ';
            value += token;
        }
        if (name != "Chromosome") {
            send("info string unknown option " + name);
            return;
        }
        stop_search();
        try {
            searcher_->set_pvt(pvt_from_store(store_path_, value));
            send("info string chromosome " + value + " loaded");
        } catch (const Error& e) {
            send(std::string("info string ") + e.what());
        }
    }

    void handle_go(std::istringstream& words) {
        stop_search();
        if (generate_legal_moves(position_).empty()) {
            send("bestmove 0000");
            return;
        }

        SearchLimits limits;
        bool infinite = false;
        std::string token;
        while (words >> token) {
            long value = 0;
            const auto read_value = [&]() -> bool {
                if (!(words >> value)) return false;
                return value > 0;
            };
            if (token == "depth") {
                if (read_value()) limits.max_depth = static_cast<int>(value);
            } else if (token == "nodes") {
                if (read_value()) limits.max_nodes = static_cast<uint64_t>(value);
            } else if (token == "movetime") {
                if (read_value()) limits.move_time_ms = value;
            } else if (token == "infinite") {
                infinite = true;
            }
            // wtime/btime/ponder and friends are ignored
        }
        if (infinite) limits = SearchLimits::infinite();
        else if (!limits.max_depth && !limits.max_nodes && !limits.move_time_ms)
            limits.max_depth = 4;

        stop_flag_.store(false);
        search_thread_ = std::thread([this, limits, infinite, root = position_] {
            SearchResult result;
            try {
                result = searcher_->search(root, limits, &stop_flag_,
                                           [this](const SearchResult& it) { report(it); });
            } catch (const std::exception& e) {
                send(std::string("info string search error: ") + e.what());
                send("bestmove 0000");
                return;
            }
            if (infinite) {  // bestmove only after "stop"
                while (!stop_flag_.load(std::memory_order_relaxed))
                    std::this_thread::sleep_for(std::chrono::milliseconds(1));
            }
            send("bestmove " + to_uci(result.best_move));
        });
    }

    void report(const SearchResult& it) {
        std::ostringstream info;
        info << "info depth " << it.depth_reached;
        const double mate_window = MATE_SCORE - 1000.0;
        if (it.score >= mate_window) {
            info << " score mate " << (static_cast<int>(MATE_SCORE - it.score) + 1) / 2;
        } else if (it.score <= -mate_window) {
            info << " score mate -" << (static_cast<int>(MATE_SCORE + it.score) + 1) / 2;
        } else {
            info << " score cp " << static_cast<long>(std::lround(it.score));
        }
        info << " nodes " << it.nodes;
        if (!it.pv.empty()) {
            info << " pv";
            for (const Move& m : it.pv) info << ' ' << to_uci(m);
        }
        send(info.str());
    }

    void stop_search() {
        stop_flag_.store(true);
        if (search_thread_.joinable()) search_thread_.join();
    }

    std::istream& in_;
    std::ostream& out_;
    std::string store_path_;
    Position position_;
    std::unique_ptr<Searcher> searcher_;
    std::thread search_thread_;
    std::atomic<bool> stop_flag_{false};
    std::mutex out_mutex_;
};

}  // namespace

int uci_loop(std::istream& in, std::ostream& out, const std::string& store_path,
             const std::string& chromosome_id) {
    Session session(in, out, store_path, chromosome_id);
    return session.run();
}

}  // namespace phoenix
