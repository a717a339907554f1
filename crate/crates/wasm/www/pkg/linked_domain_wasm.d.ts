/* tslint:disable */
/* eslint-disable */

/**
 * Parses `text`, builds its connectivity graph and recognizes it.
 */
export function check_profile(text: string, format: string, mode: string): string;

/**
 * Runs the greedy extension from the seed edge `{a, b}` and returns the
 * insertion order, for step-by-step display.
 */
export function closure_trace(text: string, format: string, mode: string, a: number, b: number): string;

/**
 * Names used for generated profiles, as a JSON array.
 */
export function default_names(m: number): string;

/**
 * Native-format profile from either `ic` (impartial culture, `candidates`
 * and `votes`) or `edges` (`edge_list` of `u v` lines on `candidates`
 * vertices).
 */
export function generate_profile(model: string, candidates: number, votes: number, seed: number, edge_list: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly check_profile: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly closure_trace: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number];
    readonly default_names: (a: number) => [number, number];
    readonly generate_profile: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
