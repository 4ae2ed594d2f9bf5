#pragma once

#include <string>

namespace mesur::cli {

/// Advisory lock on a lock file next to the store: many shared holders or one
/// exclusive holder across processes. Acquisition does not wait; a conflict
/// throws Error.
class FileLock {
public:
    enum class Mode { Shared, Exclusive };

    FileLock(const std::string& path, Mode mode);
    ~FileLock();

    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

}  // namespace mesur::cli
