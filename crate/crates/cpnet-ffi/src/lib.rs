//! C ABI for the cpnet engine.
//!
//! Nets are opaque handles created by [`cpn_net_parse`] and released with
//! [`cpn_net_free`]. Every fallible call returns a [`CpnStatus`] code and
//! hands results back as caller-owned C strings, released with
//! [`cpn_string_free`]. The generated header is written to
//! `include/cpnet.h` at build time.

use std::ffi::{c_char, CStr, CString};

use cpnet::compiled::CompiledNet;
use cpnet::engine::{self, SimulationConfig};
use cpnet::statespace::{self, Limits};

/// Result code of every fallible FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpnStatus {
    /// The call succeeded.
    CpnOk = 0,
    /// A required pointer argument was null.
    CpnErrInvalidArgument = 1,
    /// The source text failed to parse or validate; details are in the
    /// error string.
    CpnErrParse = 2,
    /// Exploration hit a limit before finishing; the report is still
    /// produced but carries no verdicts.
    CpnErrTruncated = 3,
}

/// Opaque handle to a compiled net.
pub struct CpnNet {
    net: CompiledNet,
}

fn string_out(out: *mut *mut c_char, text: String) {
    if !out.is_null() {
        // Interior NULs cannot occur: all payloads are JSON or diagnostics
        // built from the model's identifier characters.
        let c = CString::new(text).expect("no interior NUL");
        unsafe { *out = c.into_raw() };
    }
}

/// Parses model source text into a net handle.
///
/// On success writes the handle to `out_net` and returns `CpnOk`. On failure
/// returns `CpnErrParse` and, if `out_error` is non-null, writes a
/// newline-separated diagnostic string the caller must release with
/// `cpn_string_free`.
///
/// # Safety
/// `source` must be a valid NUL-terminated string; `out_net` must be a valid
/// pointer; `out_error` may be null.
#[no_mangle]
pub unsafe extern "C" fn cpn_net_parse(
    source: *const c_char,
    out_net: *mut *mut CpnNet,
    out_error: *mut *mut c_char,
) -> CpnStatus {
    if source.is_null() || out_net.is_null() {
        return CpnStatus::CpnErrInvalidArgument;
    }
    let Ok(source) = CStr::from_ptr(source).to_str() else {
        string_out(out_error, "source is not valid UTF-8".into());
        return CpnStatus::CpnErrParse;
    };
    let net = match cpnet::dsl::parse_net(source) {
        Ok(net) => net,
        Err(errors) => {
            let text = errors
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            string_out(out_error, text);
            return CpnStatus::CpnErrParse;
        }
    };
    match CompiledNet::compile(net) {
        Ok(net) => {
            *out_net = Box::into_raw(Box::new(CpnNet { net }));
            CpnStatus::CpnOk
        }
        Err(diags) => {
            let text = diags
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            string_out(out_error, text);
            CpnStatus::CpnErrParse
        }
    }
}

/// Releases a net handle. Null is ignored.
///
/// # Safety
/// `net` must be null or a handle returned by `cpn_net_parse` that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn cpn_net_free(net: *mut CpnNet) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// Number of places in the net.
///
/// # Safety
/// `net` must be a live handle from `cpn_net_parse`.
#[no_mangle]
pub unsafe extern "C" fn cpn_net_place_count(net: *const CpnNet) -> u64 {
    (*net).net.place_count() as u64
}

/// Number of transitions in the net.
///
/// # Safety
/// `net` must be a live handle from `cpn_net_parse`.
#[no_mangle]
pub unsafe extern "C" fn cpn_net_transition_count(net: *const CpnNet) -> u64 {
    (*net).net.transition_count() as u64
}

/// Runs the seeded random-firing simulator and writes the JSON report to
/// `out_json` (caller frees with `cpn_string_free`).
///
/// # Safety
/// `net` must be a live handle; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cpn_simulate_json(
    net: *const CpnNet,
    max_steps: u64,
    seed: u64,
    out_json: *mut *mut c_char,
) -> CpnStatus {
    if net.is_null() || out_json.is_null() {
        return CpnStatus::CpnErrInvalidArgument;
    }
    let net = &(*net).net;
    let config = SimulationConfig {
        max_steps,
        seed,
        record_trace: false,
    };
    let report = engine::simulate(net, &config);
    string_out(out_json, report.to_json(net).to_string());
    CpnStatus::CpnOk
}

/// Explores the state space under the given limits (0 selects the default
/// for that limit), runs the analyses, and writes the JSON report to
/// `out_json` (caller frees with `cpn_string_free`).
///
/// Returns `CpnErrTruncated` if a limit was hit; the report is still
/// written, with `"complete": false` and no verdicts.
///
/// # Safety
/// `net` must be a live handle; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cpn_explore_json(
    net: *const CpnNet,
    max_states: u64,
    max_arcs: u64,
    max_seconds: u64,
    out_json: *mut *mut c_char,
) -> CpnStatus {
    if net.is_null() || out_json.is_null() {
        return CpnStatus::CpnErrInvalidArgument;
    }
    let net = &(*net).net;
    let defaults = Limits::default();
    let limits = Limits {
        max_states: if max_states == 0 {
            defaults.max_states
        } else {
            max_states as usize
        },
        max_arcs: if max_arcs == 0 {
            defaults.max_arcs
        } else {
            max_arcs as usize
        },
        max_seconds: if max_seconds == 0 {
            defaults.max_seconds
        } else {
            max_seconds
        },
    };
    let graph = statespace::explore(net, &limits);
    let report = statespace::analyze(net, &graph);
    let complete = report.complete;
    string_out(out_json, report.to_json(net).to_string());
    if complete {
        CpnStatus::CpnOk
    } else {
        CpnStatus::CpnErrTruncated
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn cpn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
