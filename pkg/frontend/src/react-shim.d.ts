// Typing fallback for instantiated workspaces, which carry no
// node_modules. Everything is typed any, so the workspace build gates
// on syntax and emit rather than type depth, the same tradeoff bundler
// pipelines make. Full types apply in this repo's own typecheck, which
// resolves the real packages and never includes this file.
//
// The declared value surface mirrors vendor/runtime.js on purpose: an
// import the runtime bundle does not carry should fail the build here,
// not turn into a blank page later.
declare module "react" {
  namespace React {
    // Values bundled into the runtime.
    const act: any;
    const cache: any;
    const Children: any;
    const cloneElement: any;
    const Component: any;
    const createContext: any;
    const createElement: any;
    const createRef: any;
    const forwardRef: any;
    const Fragment: any;
    const isValidElement: any;
    const lazy: any;
    const memo: any;
    const Profiler: any;
    const PureComponent: any;
    const startTransition: any;
    const StrictMode: any;
    const Suspense: any;
    const use: any;
    const useActionState: any;
    const useCallback: any;
    const useContext: any;
    const useDebugValue: any;
    const useDeferredValue: any;
    const useEffect: any;
    const useId: any;
    const useImperativeHandle: any;
    const useInsertionEffect: any;
    const useLayoutEffect: any;
    const useMemo: any;
    const useOptimistic: any;
    const useReducer: any;
    const useRef: any;
    const useState: any;
    const useSyncExternalStore: any;
    const useTransition: any;
    const version: string;

    // Common type names, all erased to any.
    type ChangeEvent<T = any> = any;
    type ChangeEventHandler<T = any> = any;
    type ComponentProps<T = any> = any;
    type ComponentType<P = any> = any;
    type Context<T = any> = any;
    type CSSProperties = any;
    type Dispatch<A = any> = any;
    type DragEvent<T = any> = any;
    type ElementType<P = any> = any;
    type EventHandler<E = any> = any;
    type FC<P = any> = any;
    type FocusEvent<T = any> = any;
    type FormEvent<T = any> = any;
    type FormEventHandler<T = any> = any;
    type FunctionComponent<P = any> = any;
    type JSXElementConstructor<P = any> = any;
    type Key = any;
    type KeyboardEvent<T = any> = any;
    type KeyboardEventHandler<T = any> = any;
    type MouseEvent<T = any> = any;
    type MouseEventHandler<T = any> = any;
    type MutableRefObject<T = any> = any;
    type PointerEvent<T = any> = any;
    type PropsWithChildren<P = any> = any;
    type Provider<T = any> = any;
    type ReactElement<P = any> = any;
    type ReactNode = any;
    type Ref<T = any> = any;
    type RefObject<T = any> = any;
    type SetStateAction<S = any> = any;
    type SyntheticEvent<T = any> = any;
    type TouchEvent<T = any> = any;
    type UIEvent<T = any> = any;
    type WheelEvent<T = any> = any;
  }
  export = React;
}

declare module "react-dom/client" {
  namespace ReactDOMClient {
    const createRoot: any;
    const hydrateRoot: any;
  }
  export = ReactDOMClient;
}

// Loose element typing for the same program: any tag, any prop, and
// JSX children map onto the children prop. Consulted only while the
// shim is active; real react types carry their own JSX namespace.
declare namespace JSX {
  type Element = any;
  interface ElementChildrenAttribute {
    children: unknown;
  }
  interface IntrinsicAttributes {
    [name: string]: any;
  }
  interface IntrinsicElements {
    [name: string]: any;
  }
}
