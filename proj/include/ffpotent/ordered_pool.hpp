#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ffpotent {

/// Runs work(i) for i in [0, count) on up to `jobs` threads and hands the
/// results to emit(i, result) on the calling thread in ascending i. emit
/// returns false to stop; no item beyond the stopping point is emitted and
/// workers stop claiming new items.
template <typename Result>
void run_ordered(std::size_t count, unsigned jobs, const std::function<Result(std::size_t)> &work,
                 const std::function<bool(std::size_t, Result &&)> &emit)
{
	if (count == 0)
		return;
	jobs = std::max(1u, jobs);
	if (jobs == 1)
	{
		for (std::size_t i = 0; i < count; ++i)
			if (!emit(i, work(i)))
				return;
		return;
	}

	std::vector<std::optional<Result>> slots(count);
	std::atomic<std::size_t> next{0};
	std::atomic<bool> stop{false};
	std::mutex mu;
	std::condition_variable ready;
	std::exception_ptr failure;

	auto worker = [&] {
		for (;;)
		{
			if (stop.load())
				return;
			const std::size_t i = next.fetch_add(1);
			if (i >= count)
				return;
			try
			{
				Result r = work(i);
				std::lock_guard lock(mu);
				slots[i].emplace(std::move(r));
			}
			catch (...)
			{
				std::lock_guard lock(mu);
				if (!failure)
					failure = std::current_exception();
				stop = true;
			}
			ready.notify_all();
		}
	};

	std::vector<std::jthread> pool;
	const auto threads = std::min<std::size_t>(jobs, count);
	for (std::size_t t = 0; t < threads; ++t)
		pool.emplace_back(worker);

	for (std::size_t i = 0; i < count; ++i)
	{
		Result r;
		{
			std::unique_lock lock(mu);
			ready.wait(lock, [&] { return slots[i].has_value() || failure; });
			if (failure)
				break;
			r = std::move(*slots[i]);
			slots[i].reset();
		}
		if (!emit(i, std::move(r)))
		{
			stop = true;
			break;
		}
	}
	stop = true;
	pool.clear();
	if (failure)
		std::rethrow_exception(failure);
}

} // namespace ffpotent
