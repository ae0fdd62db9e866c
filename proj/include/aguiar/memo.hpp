#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>

namespace aguiar {

/// Thread-safe memo table. Concurrent readers share the lock; a value is
/// computed outside the lock, so recursive lookups cannot deadlock, and when
/// two threads race on the same key the first insertion wins.
template <class Value, class Key = std::string>
class Memo {
  public:
    template <class Compute>
    Value get_or_compute(const Key &key, Compute &&compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(key); it != map_.end())
                return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

    void put(const Key &key, Value value) {
        std::unique_lock lock(mutex_);
        map_.try_emplace(key, std::move(value));
    }

    [[nodiscard]] std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

  private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value> map_;
};

} // namespace aguiar
