#include "xyzchain/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace xyzchain {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{})
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string sweep_record_csv_row(const SweepRecord& r) {
  const ChainParams& p = r.params;
  const double sum = p.jx + p.jy;
  const double gamma = (p.jx - p.jy) / sum;  // may be inf/nan when sum == 0
  std::string row;
  row += std::to_string(p.n_sites);
  row += ',';
  row += format_double(p.j_mean());
  row += ',';
  row += format_double(gamma);
  row += ',';
  row += format_double(p.jz);
  row += ',';
  row += format_double(p.b_field);
  row += ',';
  row += format_double(r.temperature);
  row += ',';
  row += std::to_string(r.pair.first);
  row += ',';
  row += std::to_string(r.pair.second);
  row += ',';
  row += format_double(r.concurrence);
  for (double l : r.lambdas) {
    row += ',';
    row += format_double(l);
  }
  row += ',';
  row += format_double(r.log_z);
  return row;
}

namespace {

// Write to a sibling temp file, rename into place on success.
void write_atomically(const std::filesystem::path& out, const std::string& body) {
  std::filesystem::path tmp = out;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(body.data(), std::streamsize(body.size()));
    if (!f) {
      f.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, out, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("rename to " + out.string() + " failed: " + ec.message());
  }
}

}  // namespace

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& out) {
  std::string body(kSweepCsvHeader);
  body += '\n';
  for (const SweepRecord& r : result.records) {
    body += sweep_record_csv_row(r);
    body += '\n';
  }
  write_atomically(out, body);
}

void write_scan_csv(const std::string& x_name,
                    const std::vector<std::pair<double, double>>& rows,
                    const std::filesystem::path& out) {
  std::string body = x_name + ",concurrence\n";
  for (const auto& [x, c] : rows) {
    body += format_double(x);
    body += ',';
    body += format_double(c);
    body += '\n';
  }
  write_atomically(out, body);
}

}  // namespace xyzchain
