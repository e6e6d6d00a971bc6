// Minimal declarations for the papaparse API surface used here (the package
// ships no type definitions and the full community typings are not vendored).
declare module "papaparse" {
  export interface ParseError {
    type: string;
    code: string;
    message: string;
    row?: number;
  }
  export interface ParseResult<T> {
    data: T[];
    errors: ParseError[];
    meta: { fields?: string[] };
  }
  export interface ParseConfig {
    header?: boolean;
    comments?: string | boolean;
    skipEmptyLines?: boolean | "greedy";
  }
  function parse<T>(input: string, config?: ParseConfig): ParseResult<T>;
  const Papa: { parse: typeof parse };
  export default Papa;
}
